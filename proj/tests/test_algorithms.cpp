#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qquery/algorithms.hpp"
#include "qquery/errors.hpp"
#include "qquery/io.hpp"
#include "qquery/polynomial.hpp"
#include "qquery/qsim.hpp"

using namespace qquery;

namespace {

constexpr double kTol = 1e-9;

std::uint32_t first_inputs_of_weight(int n, int t) { return t == 0 ? 0u : ((1u << t) - 1) << (n - t); }

}  // namespace

TEST(Xor, ExactOnEveryPair) {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto c = xor_circuit(n, i, j);
        EXPECT_EQ(c.query_count(), 1);
        const auto f = TruthTable::from_predicate(n, [&](std::uint32_t x) { return ((x >> i) ^ (x >> j)) & 1; });
        ASSERT_TRUE(check_exact(c, f).pass) << n << " " << i << " " << j;
      }
    }
  }
  EXPECT_THROW(xor_circuit(3, 1, 1), ParameterError);
  EXPECT_THROW(xor_circuit(3, 0, 3), ParameterError);
}

TEST(Parity, ExactWithHalfTheQueries) {
  for (int n = 1; n <= 8; ++n) {
    const auto c = parity_circuit(n);
    EXPECT_EQ(c.query_count(), (n + 1) / 2);
    ASSERT_TRUE(check_exact(c, from_family(Family::Parity, n)).pass) << n;
  }
}

TEST(Parity, TwoBitsIsTheXorGadget) {
  EXPECT_EQ(circuit_to_json(parity_circuit(2)).dump(), circuit_to_json(xor_circuit(2, 0, 1)).dump());
}

TEST(Parity, AcceptancePolynomialIsTheParityPolynomial) {
  for (int n : {2, 4, 6, 8}) {
    const auto c = parity_circuit(n);
    const auto p = to_rational(acceptance_polynomial(c, output_is(c, true)));
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(*p, interpolate(from_family(Family::Parity, n))) << n;
    EXPECT_GE(2 * c.query_count(), p->degree());
  }
}

TEST(ZeroErrorOr, ReferenceCircuit) {
  for (int n = 1; n <= 4; ++n) {
    const auto c = zero_error_or_circuit(n);
    EXPECT_EQ(c.query_count(), n);
    EXPECT_TRUE(check_zero_error(c, from_family(Family::Or, n)).pass);
  }
}

TEST(Grover, RunMatchesClosedForm) {
  for (int n : {4, 8}) {
    for (int j = 0; j <= 3; ++j) {
      const GroverOr driver(n, GroverSchedule{{j, 0}});
      for (int t = 0; t <= n; ++t) {
        const auto x = first_inputs_of_weight(n, t);
        const auto dist = driver.index_distribution(0, x);
        double marked = 0;
        for (int i = 0; i < n; ++i) {
          if ((x >> i) & 1) marked += dist[static_cast<std::size_t>(i)];
        }
        const double expected = t == 0 ? 0.0 : oracle::grover_success(n, t, j);
        ASSERT_NEAR(marked, expected, kTol) << n << " " << j << " " << t;
      }
    }
  }
}

TEST(Grover, SingleIterationFindsTheUniqueMarkedIndexOf4) {
  const GroverOr driver(4, GroverSchedule{{1, 1}});
  for (int i = 0; i < 4; ++i) {
    const auto dist = driver.index_distribution(0, 1u << i);
    EXPECT_NEAR(dist[static_cast<std::size_t>(i)], 1.0, kTol);
  }
}

TEST(Grover, NeverReportsOneOnTheZeroInput) {
  for (int n : {4, 8, 16}) {
    const GroverOr driver(n);
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto out = driver.run(0, rng);
      ASSERT_FALSE(out.value);
      ASSERT_EQ(out.queries, driver.queries());
    }
    EXPECT_DOUBLE_EQ(driver.success_probability(0), 1.0);
  }
}

TEST(Grover, ShippedSchedulesMatchTheSearch) {
  for (int n : {4, 8, 16}) {
    EXPECT_EQ(shipped_grover_schedule(n), search_grover_schedule(n)) << n;
    EXPECT_LE(shipped_grover_schedule(n).budget(), static_cast<int>(std::ceil(3 * std::sqrt(n))) + 2);
  }
  EXPECT_THROW(GroverOr(5), CapabilityError);
}

TEST(Grover, SuccessAtLeastTwoThirdsOnEveryInputOf8) {
  const GroverOr driver(8);
  for (std::uint32_t x = 0; x < 256; ++x) ASSERT_GE(driver.success_probability(x), 2.0 / 3.0) << x;
}

TEST(Grover, SampledRunsAgreeWithTheirCandidates) {
  const GroverOr driver(8);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t x = static_cast<std::uint32_t>(rng() & 0xff);
    const auto out = driver.run(x, rng);
    if (out.value) {
      ASSERT_FALSE(out.candidates.empty());
      ASSERT_TRUE((x >> out.candidates.back()) & 1);
    }
    ASSERT_LE(out.queries, driver.queries());
  }
}

TEST(Grover, CoherentCircuitIsBoundedError) {
  const auto c = grover_or_circuit(4, shipped_grover_schedule(4));
  EXPECT_EQ(c.query_count(), shipped_grover_schedule(4).budget());
  EXPECT_TRUE(check_bounded_error(c, from_family(Family::Or, 4)).pass);
}

TEST(Counting, DistributionMatchesPhaseEstimation) {
  for (int n : {4, 8}) {
    const auto cc = counting_circuit(n);
    EXPECT_EQ(cc.precision, default_counting_precision(n));
    EXPECT_EQ(cc.queries(), (1 << cc.precision) - 1);
    for (int t = 0; t <= n; ++t) {
      const double phi = std::asin(std::sqrt(static_cast<double>(t) / n)) / std::acos(-1.0);
      const auto readout = oracle::phase_estimation(phi, cc.precision);
      std::vector<double> expected(static_cast<std::size_t>(n) + 1, 0.0);
      for (std::size_t y = 0; y < readout.size(); ++y) {
        const double s = std::sin(std::acos(-1.0) * static_cast<double>(y) / static_cast<double>(readout.size()));
        expected[static_cast<std::size_t>(std::lround(n * s * s))] += readout[y];
      }
      const auto got = counting_distribution(cc, first_inputs_of_weight(n, t));
      ASSERT_EQ(got.distribution.size(), expected.size());
      for (std::size_t k = 0; k < expected.size(); ++k) {
        ASSERT_NEAR(got.distribution[k], expected[k], 1e-9) << n << " " << t << " " << k;
      }
    }
  }
}

TEST(Counting, DecoderAndSuccess) {
  const auto cc = counting_circuit(4);
  ASSERT_EQ(cc.decoder.size(), std::size_t{1} << cc.precision);
  EXPECT_EQ(cc.decoder[0], 0);
  EXPECT_EQ(cc.decoder[std::size_t{1} << (cc.precision - 1)], 4);
  for (int n : {4, 8}) {
    for (double p : counting_success_by_weight(counting_circuit(n))) EXPECT_GE(p, 0.75);
  }
  EXPECT_THROW(counting_circuit(6), CapabilityError);
  EXPECT_THROW(counting_circuit(4, 0), ParameterError);
}

TEST(SymmetricEval, DecisionRule) {
  const SymmetricEvaluator maj(*symmetric_profile(from_family(Family::Majority, 8)));
  EXPECT_TRUE(maj.band().empty());
  EXPECT_FALSE(maj.decide(4));
  EXPECT_TRUE(maj.decide(5));
  const SymmetricEvaluator orf(*symmetric_profile(from_family(Family::Or, 8)));
  EXPECT_EQ(orf.band(), (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(orf.decide(0));
  EXPECT_TRUE(orf.decide(3));
  EXPECT_TRUE(orf.decide(8));
  const SymmetricEvaluator par(*symmetric_profile(from_family(Family::Parity, 4)));
  EXPECT_TRUE(par.band().empty());
  EXPECT_TRUE(par.decide(3));
}

TEST(SymmetricEval, Examples) {
  const auto maj = *symmetric_profile(from_family(Family::Majority, 8));
  const auto r = symmetric_eval(maj, 0b00011111, 1);
  EXPECT_EQ(r.estimates.size(), 3u);
  EXPECT_EQ(r.queries, 3 * counting_circuit(8).queries());
  EXPECT_GE(r.success, 2.0 / 3.0);
  EXPECT_GE(r.success, r.round_success - kTol);
  const auto orf = *symmetric_profile(from_family(Family::Or, 8));
  EXPECT_FALSE(symmetric_eval(orf, 0, 3).value);
  EXPECT_NEAR(symmetric_eval(orf, 0, 3).success, 1.0, 1e-9);
}

TEST(SymmetricEval, SeededRunsAreDeterministic) {
  const auto maj = *symmetric_profile(from_family(Family::Majority, 8));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = symmetric_eval(maj, 0b01010111, seed);
    const auto b = symmetric_eval(maj, 0b01010111, seed);
    EXPECT_EQ(a.estimates, b.estimates);
    EXPECT_EQ(a.value, b.value);
  }
}

TEST(SymmetricEval, Errors) {
  EXPECT_THROW(SymmetricEvaluator(SymmetricProfile{4, {1, 1, 1, 1, 1}}), DomainError);
  const auto maj = *symmetric_profile(from_family(Family::Majority, 4));
  EXPECT_THROW(SymmetricEvaluator(maj, 2), ParameterError);
  EXPECT_THROW(SymmetricEvaluator(maj, 0), ParameterError);
  EXPECT_THROW(SymmetricEvaluator(*symmetric_profile(from_family(Family::Majority, 6))), CapabilityError);
}
