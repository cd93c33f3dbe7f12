#include <gtest/gtest.h>

#include <bit>

#include "oracles.hpp"
#include "qquery/boolfn.hpp"
#include "qquery/errors.hpp"

using namespace qquery;

namespace {

std::vector<std::uint8_t> table_of(const TruthTable& f) { return {f.bits().begin(), f.bits().end()}; }

bool family_predicate(Family fam, int n, int m, std::uint32_t x) {
  const int w = std::popcount(x);
  switch (fam) {
    case Family::Or: return w > 0;
    case Family::And: return w == n;
    case Family::Parity: return w % 2 == 1;
    case Family::Majority: return 2 * w > n;
    case Family::Threshold: return w >= m;
  }
  return false;
}

}  // namespace

TEST(FromFamily, SmallTables) {
  EXPECT_EQ(table_of(from_family(Family::Or, 2)), (std::vector<std::uint8_t>{0, 1, 1, 1}));
  EXPECT_EQ(table_of(from_family(Family::Parity, 2)), (std::vector<std::uint8_t>{0, 1, 1, 0}));
  const auto maj3 = from_family(Family::Majority, 3);
  for (std::uint32_t x = 0; x < 8; ++x) EXPECT_EQ(maj3[x], std::popcount(x) >= 2);
}

TEST(FromFamily, RejectsBadParameters) {
  EXPECT_THROW(from_family(Family::Or, 0), ParameterError);
  EXPECT_THROW(from_family(Family::Or, 21), ParameterError);
  EXPECT_THROW(from_family(Family::Threshold, 3), ParameterError);
  EXPECT_THROW(from_family(Family::Threshold, 3, 0), ParameterError);
  EXPECT_THROW(from_family(Family::Threshold, 3, 4), ParameterError);
}

TEST(FromFamily, MajorityIsStrictOnEvenN) {
  const auto maj4 = from_family(Family::Majority, 4);
  EXPECT_FALSE(maj4[0b0011]);
  EXPECT_TRUE(maj4[0b0111]);
}

TEST(Evaluate, Bitstrings) {
  EXPECT_FALSE(evaluate(from_family(Family::Or, 2), "00"));
  EXPECT_TRUE(evaluate(from_family(Family::Or, 2), "10"));
  EXPECT_TRUE(evaluate(from_family(Family::Parity, 4), "1101"));
  EXPECT_THROW(evaluate(from_family(Family::Or, 2), "101"), ParameterError);
  EXPECT_THROW(evaluate(from_family(Family::Or, 2), "1x"), ParameterError);
}

TEST(Evaluate, CharacterIIsBitI) {
  const auto f = TruthTable::from_predicate(3, [](std::uint32_t x) { return x == 0b001; });
  EXPECT_TRUE(evaluate(f, "100"));
  EXPECT_FALSE(evaluate(f, "001"));
  EXPECT_EQ(parse_bits("100", 3), 1u);
  EXPECT_EQ(format_bits(1, 3), "100");
}

TEST(SymmetricProfile, Examples) {
  EXPECT_EQ(symmetric_profile(from_family(Family::Or, 4))->values, (std::vector<std::uint8_t>{0, 1, 1, 1, 1}));
  EXPECT_EQ(symmetric_profile(from_family(Family::Parity, 4))->values, (std::vector<std::uint8_t>{0, 1, 0, 1, 0}));
  const auto asym = TruthTable(2, {0, 1, 0, 0});  // f(10) = 1, f(01) = 0
  EXPECT_FALSE(symmetric_profile(asym).has_value());
}

TEST(SymmetricProfile, FamiliesMatchDefinitionUpTo12) {
  for (int n = 1; n <= 12; ++n) {
    for (auto fam : {Family::Or, Family::And, Family::Parity, Family::Majority, Family::Threshold}) {
      const int m = std::max(1, n / 2);
      const auto f = fam == Family::Threshold ? from_family(fam, n, m) : from_family(fam, n);
      const auto profile = symmetric_profile(f);
      ASSERT_TRUE(profile.has_value());
      for (int k = 0; k <= n; ++k) {
        const std::uint32_t x = (1u << k) - 1;
        EXPECT_EQ((*profile)[k], family_predicate(fam, n, m, x)) << family_name(fam) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(*symmetric_profile(from_family(Family::Or, 4))), 3);
  EXPECT_EQ(gamma(*symmetric_profile(from_family(Family::Parity, 4))), 1);
  EXPECT_EQ(gamma(*symmetric_profile(from_family(Family::Majority, 4))), 1);
  EXPECT_THROW(gamma(SymmetricProfile{3, {1, 1, 1, 1}}), DomainError);
}

TEST(Gamma, OddNParityAndMajorityJumpAtTheMiddle) {
  // |2k - n + 1| vanishes at k = (n - 1)/2.
  EXPECT_EQ(gamma(*symmetric_profile(from_family(Family::Parity, 5))), 0);
  EXPECT_EQ(gamma(*symmetric_profile(from_family(Family::Majority, 5))), 0);
}

TEST(Gamma, MatchesOracleAndIsInvariantUnderComplementAndReversal) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << (n + 1)); ++bits) {
      SymmetricProfile p{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) + 1)};
      for (int k = 0; k <= n; ++k) p.values[static_cast<std::size_t>(k)] = (bits >> k) & 1;
      if (p.is_constant()) continue;
      const int g = gamma(p);
      ASSERT_EQ(g, oracle::gamma(p.values));
      auto complement = p;
      for (auto& v : complement.values) v ^= 1;
      auto reversed = p;
      std::reverse(reversed.values.begin(), reversed.values.end());
      ASSERT_EQ(gamma(complement), g);
      ASSERT_EQ(gamma(reversed), g);
    }
  }
}

TEST(GammaBand, ProfileIsConstantOnTheBand) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << (n + 1)); ++bits) {
      SymmetricProfile p{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) + 1)};
      for (int k = 0; k <= n; ++k) p.values[static_cast<std::size_t>(k)] = (bits >> k) & 1;
      if (p.is_constant()) continue;
      const auto band = gamma_band(p);
      for (int t : band) {
        ASSERT_EQ(p[t], p[band.front()]);
        ASSERT_GE(2 * t, n - gamma(p));
        ASSERT_LE(2 * t, n + gamma(p) - 2);
      }
    }
  }
  EXPECT_TRUE(gamma_band(*symmetric_profile(from_family(Family::Parity, 4))).empty());
  EXPECT_EQ(gamma_band(*symmetric_profile(from_family(Family::Or, 4))), (std::vector<int>{1, 2}));
}

TEST(Restrict, Examples) {
  const auto or2 = from_family(Family::Or, 2);
  EXPECT_EQ(restrict(or2, 0, true), TruthTable::constant(1, true));
  EXPECT_EQ(restrict(or2, 0, false), TruthTable(1, {0, 1}));
  const auto np2 = TruthTable(2, {1, 0, 0, 1});
  EXPECT_EQ(restrict(from_family(Family::Parity, 3), 2, true), np2);
  EXPECT_THROW(restrict(or2, 2, true), ParameterError);
}

TEST(Restrict, OneVariableGivesConstantOnZeroVariables) {
  const auto id = TruthTable(1, {0, 1});
  const auto r = restrict(id, 0, true);
  EXPECT_EQ(r.n(), 0);
  EXPECT_TRUE(r[0]);
}

TEST(Restrict, CommutesWithShiftedIndices) {
  for (int n = 2; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t w = 0; w < count; ++w) {
      const auto f = from_word(n, w);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          // After removing x_i, x_j sits at j' = j - (i < j), and vice versa.
          const int jp = j - (i < j ? 1 : 0);
          const int ip = i - (j < i ? 1 : 0);
          for (bool b : {false, true}) {
            for (bool bp : {false, true}) {
              ASSERT_EQ(restrict(restrict(f, i, b), jp, bp), restrict(restrict(f, j, bp), ip, b));
            }
          }
        }
      }
    }
  }
}

TEST(AndToMajority, Examples) {
  const auto r2 = and_to_majority(2);
  EXPECT_EQ(r2.majority, from_family(Family::Majority, 3));
  EXPECT_EQ(r2.fixed_zeros, 1);
  EXPECT_TRUE(r2.majority[r2.embed(0b11)]);
  EXPECT_FALSE(r2.majority[r2.embed(0b01)]);
  for (int n = 1; n <= 6; ++n) {
    const auto r = and_to_majority(n);
    const auto andf = from_family(Family::And, n);
    EXPECT_EQ(r.majority.n(), 2 * n - 1);
    for (std::uint32_t x = 0; x < andf.size(); ++x) ASSERT_EQ(r.majority[r.embed(x)], andf[x]) << n;
  }
}

TEST(Words, RoundTrip) {
  for (std::uint64_t w = 0; w < 256; ++w) EXPECT_EQ(to_word(from_word(3, w)), w);
  EXPECT_THROW(to_word(from_family(Family::Or, 7)), CapabilityError);
}

TEST(NpnClasses, CountsMatchKnownValues) {
  // Classes of Boolean functions under input permutation, input negation and
  // output negation: 2, 4, 14, 222 for n = 1..4.
  const std::vector<std::size_t> expected{2, 4, 14, 222};
  for (int n = 1; n <= 4; ++n) {
    auto ids = npn_class_ids(n);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    EXPECT_EQ(ids.size(), expected[static_cast<std::size_t>(n) - 1]) << n;
  }
}

TEST(Monotone, Detection) {
  EXPECT_TRUE(is_monotone(from_family(Family::Or, 3)));
  EXPECT_TRUE(is_monotone(from_family(Family::Majority, 4)));
  EXPECT_FALSE(is_monotone(from_family(Family::Parity, 2)));
  // Decreasing functions count as monotone.
  EXPECT_TRUE(is_monotone(TruthTable(2, {1, 0, 0, 0})));
}
