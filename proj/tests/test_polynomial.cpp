#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qquery/errors.hpp"
#include "qquery/polynomial.hpp"
#include "qquery/simplex.hpp"

using namespace qquery;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

MultilinearPoly poly(int n, std::initializer_list<std::pair<std::uint32_t, Rational>> terms) {
  MultilinearPoly p(n);
  for (const auto& [mask, c] : terms) p.add_term(mask, c);
  return p;
}

Rational max_error(const MultilinearPoly& p, const TruthTable& f) {
  Rational worst = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    Rational e = abs(p.evaluate(x) - (f[x] ? 1 : 0));
    if (e > worst) worst = e;
  }
  return worst;
}

Rational max_error(const UnivariatePoly& p, const SymmetricProfile& profile) {
  Rational worst = 0;
  for (int k = 0; k <= profile.n; ++k) {
    Rational e = abs(p.evaluate(k) - (profile[k] ? 1 : 0));
    if (e > worst) worst = e;
  }
  return worst;
}

}  // namespace

TEST(Interpolate, Examples) {
  EXPECT_EQ(interpolate(from_family(Family::And, 2)), poly(2, {{0b11, q(1)}}));
  EXPECT_EQ(interpolate(from_family(Family::Or, 2)), poly(2, {{0b01, q(1)}, {0b10, q(1)}, {0b11, q(-1)}}));
  EXPECT_EQ(interpolate(from_family(Family::Parity, 2)), poly(2, {{0b01, q(1)}, {0b10, q(1)}, {0b11, q(-2)}}));
}

TEST(Interpolate, OrMatchesProductForm) {
  for (int n = 1; n <= 5; ++n) {
    MultilinearPoly prod = MultilinearPoly::constant(n, q(1));
    for (int i = 0; i < n; ++i) prod = prod * (MultilinearPoly::constant(n, q(1)) - MultilinearPoly::monomial(n, 1u << i, q(1)));
    EXPECT_EQ(interpolate(from_family(Family::Or, n)), MultilinearPoly::constant(n, q(1)) - prod);
  }
}

TEST(Interpolate, RoundTripAllFunctionsUpTo4) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t w = 0; w < count; ++w) {
      const auto f = from_word(n, w);
      const auto p = interpolate(f);
      ASSERT_TRUE(represents(p, f));
      ASSERT_EQ(p.degree(), oracle::fourier_degree(f));
    }
  }
}

TEST(Interpolate, RoundTripFamiliesUpTo12) {
  for (int n = 1; n <= 12; ++n) {
    for (auto fam : {Family::Or, Family::And, Family::Parity, Family::Majority}) {
      ASSERT_TRUE(represents(interpolate(from_family(fam, n)), from_family(fam, n))) << n;
    }
  }
}

TEST(Degree, Examples) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(interpolate(from_family(Family::Parity, n)).degree(), n);
    EXPECT_EQ(interpolate(from_family(Family::Or, n)).degree(), n);
  }
  const auto zero = interpolate(TruthTable::constant(3, false));
  EXPECT_EQ(degree_info(zero).value, 0);
  EXPECT_TRUE(degree_info(zero).zero);
  EXPECT_FALSE(degree_info(interpolate(TruthTable::constant(3, true))).zero);
}

TEST(Symmetrize, Examples) {
  EXPECT_TRUE(symmetrize(poly(2, {{0b01, q(1)}, {0b10, q(-1)}})).is_zero());
  const auto q2 = symmetrize(poly(2, {{0b11, q(1)}}));
  EXPECT_EQ(q2, UnivariatePoly({q(0), q(-1, 2), q(1, 2)}));
  const auto or4 = symmetrize(interpolate(from_family(Family::Or, 4)));
  EXPECT_EQ(or4.evaluate(0), 0);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(or4.evaluate(k), 1);
}

TEST(Symmetrize, MatchesPermutationAverage) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    MultilinearPoly p(n);
    for (int t = 0; t < 5; ++t) {
      p.add_term(static_cast<std::uint32_t>(rng() % (1u << n)), q(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4));
    }
    const auto sym = symmetrize(p);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      ASSERT_EQ(sym.evaluate(std::popcount(x)), oracle::permutation_average(p, x));
    }
  }
}

TEST(Symmetrize, DegreeNeverIncreases) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    MultilinearPoly p(n);
    for (int t = 0; t < 4; ++t) {
      p.add_term(static_cast<std::uint32_t>(rng() % (1u << n)), q(static_cast<long>(rng() % 9) - 4));
    }
    ASSERT_LE(symmetrize(p).degree(), p.degree());
  }
}

TEST(Simplex, SmallProblem) {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3  ->  x = 3, y = 1, value 11.
  CanonicalLp lp{{{q(1), q(1)}, {q(1), q(3)}, {q(1), q(0)}}, {q(4), q(6), q(3)}, {q(3), q(2)}};
  const auto sol = solve_lp(lp);
  EXPECT_EQ(sol.objective, 11);
  EXPECT_EQ(sol.x[0], 3);
  EXPECT_EQ(sol.x[1], 1);
}

TEST(Simplex, RejectsUnboundedAndMalformed) {
  EXPECT_THROW(solve_lp(CanonicalLp{{{q(-1)}}, {q(1)}, {q(1)}}), DomainError);
  EXPECT_THROW(solve_lp(CanonicalLp{{{q(1)}}, {q(-1)}, {q(1)}}), ParameterError);
  EXPECT_THROW(solve_lp(CanonicalLp{{{q(1), q(1)}}, {q(1)}, {q(1)}}), ParameterError);
}

TEST(LpMinError, Examples) {
  const auto and2 = from_family(Family::And, 2);
  const auto d1 = lp_min_error(and2, 1);
  EXPECT_LE(d1.min_error, one_third());
  const auto& w = std::get<MultilinearPoly>(d1.witness);
  EXPECT_LE(w.degree(), 1);
  EXPECT_EQ(max_error(w, and2), d1.min_error);
  EXPECT_EQ(lp_min_error(and2, 0).min_error, q(1, 2));
  EXPECT_GE(lp_min_error(from_family(Family::Parity, 4), 3).min_error, q(1, 2));
}

TEST(LpMinError, LinearWitnessApproximatesAnd) {
  const auto p = poly(2, {{0b01, q(1, 3)}, {0b10, q(1, 3)}});
  EXPECT_LE(max_error(p, from_family(Family::And, 2)), one_third());
  EXPECT_FALSE(represents(p, from_family(Family::And, 2)));
}

TEST(LpMinError, MonotoneInDegreeAndWitnessExact) {
  for (std::uint64_t w = 0; w < 256; w += 7) {
    const auto f = from_word(3, w);
    Rational prev = 1;
    for (int d = 0; d <= 3; ++d) {
      const auto r = lp_min_error(f, d);
      ASSERT_LE(r.min_error, prev);
      const auto& p = std::get<MultilinearPoly>(r.witness);
      ASSERT_LE(p.degree(), d);
      ASSERT_EQ(max_error(p, f), r.min_error);
      prev = r.min_error;
    }
    ASSERT_EQ(prev, 0);
  }
}

TEST(ApproxDegree, Examples) {
  EXPECT_EQ(approx_degree(from_family(Family::And, 2)), 1);
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(approx_degree(from_family(Family::Parity, n)), n);
  EXPECT_EQ(approx_degree(TruthTable::constant(3, true)), 0);
  EXPECT_THROW(approx_degree(from_family(Family::Or, 5)), CapabilityError);
}

TEST(ApproxDegree, AtMostDegreeForEveryFunctionOn3) {
  for (std::uint64_t w = 0; w < 256; ++w) {
    const auto f = from_word(3, w);
    ASSERT_LE(approx_degree(f), interpolate(f).degree());
  }
}

TEST(SymmetricApproxDegree, Examples) {
  EXPECT_EQ(symmetric_approx_degree(*symmetric_profile(from_family(Family::Or, 4))), 2);
  EXPECT_EQ(approx_degree(from_family(Family::Or, 4)), 2);
  EXPECT_EQ(symmetric_approx_degree(*symmetric_profile(from_family(Family::Parity, 8))), 8);
  const auto maj4 = *symmetric_profile(from_family(Family::Majority, 4));
  const int v = symmetric_approx_degree(maj4);
  EXPECT_GE(v, 1);
  EXPECT_LE(v, 4);
}

TEST(SymmetricApproxDegree, WitnessMeetsBound) {
  const auto profile = *symmetric_profile(from_family(Family::Majority, 7));
  const int d = symmetric_approx_degree(profile);
  const auto r = symmetric_lp_min_error(profile, d);
  EXPECT_LE(r.min_error, one_third());
  EXPECT_EQ(max_error(std::get<UnivariatePoly>(r.witness), profile), r.min_error);
  EXPECT_GT(symmetric_lp_min_error(profile, d - 1).min_error, one_third());
}

TEST(SymmetricApproxDegree, AgreesWithGeneralLpOnSymmetricFunctions) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << (n + 1)); ++bits) {
      SymmetricProfile p{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) + 1)};
      for (int k = 0; k <= n; ++k) p.values[static_cast<std::size_t>(k)] = (bits >> k) & 1;
      ASSERT_EQ(symmetric_approx_degree(p), approx_degree(from_profile(p))) << n << " " << bits;
    }
  }
}

TEST(MarkovBound, Examples) {
  EXPECT_DOUBLE_EQ(markov_bound(q(0), q(1), q(1, 3), 16), 2.0);
  EXPECT_DOUBLE_EQ(markov_bound(q(0), q(1), q(1, 3), 36), std::sqrt(36.0 / 4));
  EXPECT_DOUBLE_EQ(markov_bound(q(0), q(0), q(1), 9), 3.0);
  EXPECT_THROW(markov_bound(q(0), q(1), q(0), 4), DomainError);
  EXPECT_THROW(markov_bound(q(1), q(0), q(1), 4), DomainError);
}

TEST(RestrictBlocks, Examples) {
  const auto or4 = interpolate(from_family(Family::Or, 4));
  EXPECT_EQ(restrict_blocks(or4, 0, {0b0001, 0b0010, 0b0100, 0b1000}), or4);
  const auto p = interpolate(from_family(Family::Majority, 3));
  const auto c = restrict_blocks(p, 0b011, {});
  EXPECT_EQ(c.n(), 0);
  EXPECT_EQ(c.evaluate(0), p.evaluate(0b011));
  const auto par = restrict_blocks(interpolate(from_family(Family::Parity, 4)), 0, {0b0011, 0b1100});
  EXPECT_TRUE(par.is_zero());
  EXPECT_THROW(restrict_blocks(or4, 0, {0b0011, 0b0110}), ParameterError);
  EXPECT_THROW(restrict_blocks(or4, 0, {0}), ParameterError);
}

TEST(RestrictBlocks, FlipsBlocksAndKeepsDegree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = from_word(4, rng() & 0xffff);
    const auto p = interpolate(f);
    const std::uint32_t x = rng() & 0xf;
    const std::vector<std::uint32_t> blocks{0b0101, 0b0010};
    const auto r = restrict_blocks(p, x, blocks);
    ASSERT_LE(r.degree(), p.degree());
    for (std::uint32_t y = 0; y < 4; ++y) {
      std::uint32_t z = x;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if ((y >> i) & 1) z ^= blocks[i];
      }
      ASSERT_EQ(r.evaluate(y), p.evaluate(z));
    }
  }
}
