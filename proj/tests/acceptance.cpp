// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.
// Tolerances are pinned below and printed with each line.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "qquery/algorithms.hpp"
#include "qquery/cli.hpp"
#include "qquery/measures.hpp"
#include "qquery/polynomial.hpp"
#include "qquery/qsim.hpp"
#include "random_circuits.hpp"

using namespace qquery;

namespace {

constexpr double kAmplitudeTol = 1e-9;
constexpr int kRandomCircuits = 200;

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double budget_s, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= budget_s;
  const bool pass = v.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%2d] %s  %-34s %s; %.2fs of %.0fs%s\n", id, pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(),
              secs, budget_s, in_time ? "" : " (over budget)");
  std::fflush(stdout);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

// Degree of the unique polynomial q with q(k) = f_k on 0..n: the order of the
// highest nonvanishing forward difference at 0.
int profile_degree(const SymmetricProfile& p) {
  std::vector<long long> d(p.values.begin(), p.values.end());
  int deg = 0;
  for (int j = 0; j <= p.n; ++j) {
    if (d[0] != 0) deg = j;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) d[k] = d[k + 1] - d[k];
    d.pop_back();
  }
  return deg;
}

Verdict parity_row() {
  std::vector<std::string> parts;
  bool ok = true;
  for (int n : {2, 4, 6, 8}) {
    const auto c = parity_circuit(n);
    const bool exact = check_exact(c, from_family(Family::Parity, n)).pass;
    const int deg = interpolate(from_family(Family::Parity, n)).degree();
    const bool tight = c.query_count() == n / 2 && 2 * c.query_count() == deg;
    ok = ok && exact && tight;
    parts.push_back("n=" + std::to_string(n) + ":T=" + std::to_string(c.query_count()) + ",deg/2=" +
                    std::to_string(deg / 2) + (exact ? "" : ",not-exact"));
  }
  return {ok, join(parts)};
}

Verdict parity_adeg() {
  std::vector<std::string> parts;
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    const int a = symmetric_approx_degree(*symmetric_profile(from_family(Family::Parity, n)));
    ok = ok && a == n;
    parts.push_back(std::to_string(a));
  }
  return {ok, "adeg(PARITY_2..8) = " + join(parts)};
}

Verdict symbolic_audit() {
  std::mt19937_64 rng(20240601);
  int violations = 0;
  int max_t = 0;
  for (int k = 0; k < kRandomCircuits; ++k) {
    const int queries = k % 4;
    max_t = std::max(max_t, queries);
    const auto c = testing_support::random_circuit(rng, 3, 5, queries);
    const auto st = symbolic_run(c);
    if (st.max_degree() > queries) ++violations;
    const auto accept = acceptance_polynomial(st, output_is(c, true));
    if (accept.degree() > 2 * queries) ++violations;
    for (std::uint32_t x = 0; x < (1u << c.n()); ++x) {
      const auto sv = simulate(c, x);
      for (std::size_t b = 0; b < sv.amplitudes.size(); ++b) {
        if (std::abs(evaluate_complex(st.amplitudes[b], x) - sv.amplitudes[b]) > kAmplitudeTol) ++violations;
      }
      const double p = accept.evaluate(x).to_double();
      if (std::abs(p - sv.qubit_probability(c.output_qubit(), true)) > kAmplitudeTol) ++violations;
    }
  }
  return {violations == 0, std::to_string(kRandomCircuits) + " circuits, T<=" + std::to_string(max_t) +
                               ", violations=" + std::to_string(violations) + ", tol=1e-9"};
}

Verdict inequality_chain() {
  SuiteConfig config;
  config.n = 4;
  config.source = FunctionSource::Exhaustive;
  config.include_adeg = true;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  const auto result = run_enumeration(config);
  bool has_monotone = false;
  for (const auto& [name, count] : result.violations) has_monotone = has_monotone || name == "bs=C";
  const bool ok = result.functions == 65536 && result.total_violations() == 0 && has_monotone &&
                  result.violations.size() == 12;
  return {ok, std::to_string(result.functions) + " functions, " + std::to_string(result.violations.size()) +
                  " inequalities, violations=" + std::to_string(result.total_violations())};
}

Verdict algorithm_a() {
  std::size_t pairs = 0, violations = 0;
  int worst_slack = 1 << 20;
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t w = 0; w < count; ++w) {
      const auto f = from_word(n, w);
      const int budget = certificate_complexity(f).c1 * block_sensitivity(f).value;
      const AlgorithmA alg(f);
      for (std::uint32_t x = 0; x < f.size(); ++x) {
        const auto r = alg.run(x);
        ++pairs;
        if (r.value != f[x] || r.queries > budget) ++violations;
        worst_slack = std::min(worst_slack, budget - r.queries);
      }
    }
  }
  return {violations == 0, std::to_string(pairs) + " (f,x) pairs, violations=" + std::to_string(violations) +
                               ", min slack=" + std::to_string(worst_slack)};
}

Verdict counting() {
  std::vector<std::string> parts;
  bool ok = true;
  for (int n : {4, 8}) {
    const auto cc = counting_circuit(n);
    const auto by_weight = counting_success_by_weight(cc);
    const double worst = *std::min_element(by_weight.begin(), by_weight.end());
    ok = ok && worst >= 0.75;
    char buf[96];
    std::snprintf(buf, sizeof buf, "n=%d:p=%d,min P=%.4f,T=%d", n, cc.precision, worst, cc.queries());
    parts.emplace_back(buf);
  }
  return {ok, join(parts) + ", threshold 3/4"};
}

Verdict grover() {
  std::vector<std::string> parts;
  bool ok = true;
  for (int n : {4, 8, 16}) {
    const GroverOr driver(n);
    double worst = 1.0;
    for (std::uint32_t x = 0; x < (1u << n); ++x) worst = std::min(worst, driver.success_probability(x));
    const int cap = static_cast<int>(std::ceil(3 * std::sqrt(static_cast<double>(n)))) + 2;
    ok = ok && worst >= 2.0 / 3.0 && driver.queries() <= cap;
    char buf[96];
    std::snprintf(buf, sizeof buf, "n=%d:min P=%.4f,T=%d<=%d", n, worst, driver.queries(), cap);
    parts.emplace_back(buf);
  }
  return {ok, join(parts) + ", threshold 2/3"};
}

Verdict zero_error_witness() {
  std::vector<std::string> parts;
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    const auto w = zero_error_witness_poly(zero_error_or_circuit(n));
    ok = ok && w.represents_or && w.degree == n;
    parts.push_back("n=" + std::to_string(n) + ":deg=" + std::to_string(w.degree) + (w.represents_or ? ",OR" : ",not-OR"));
  }
  return {ok, join(parts)};
}

Verdict prime_case() {
  std::size_t checked = 0, violations = 0;
  for (int n : {2, 4, 6, 10, 12}) {
    for (std::uint32_t bits = 1; bits + 1 < (1u << (n + 1)); ++bits) {
      SymmetricProfile p{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) + 1)};
      for (int k = 0; k <= n; ++k) p.values[static_cast<std::size_t>(k)] = (bits >> k) & 1;
      ++checked;
      // Multilinear interpolation where it is cheap, the univariate
      // difference table otherwise.
      const int deg = n <= 10 ? interpolate(from_profile(p)).degree() : profile_degree(p);
      if (deg != n) ++violations;
    }
  }
  return {violations == 0, std::to_string(checked) + " symmetric functions, violations=" + std::to_string(violations)};
}

Verdict gamma_values() {
  std::vector<std::string> bad;
  for (int n = 2; n <= 12; ++n) {
    const int g_or = gamma(*symmetric_profile(from_family(Family::Or, n)));
    const int g_and = gamma(*symmetric_profile(from_family(Family::And, n)));
    const int g_par = gamma(*symmetric_profile(from_family(Family::Parity, n)));
    const int g_maj = gamma(*symmetric_profile(from_family(Family::Majority, n)));
    if (g_or != n - 1) bad.push_back("OR_" + std::to_string(n) + "=" + std::to_string(g_or));
    if (g_and != n - 1) bad.push_back("AND_" + std::to_string(n) + "=" + std::to_string(g_and));
    if (g_par != 1) bad.push_back("PARITY_" + std::to_string(n) + "=" + std::to_string(g_par));
    if (g_maj != 1) bad.push_back("MAJORITY_" + std::to_string(n) + "=" + std::to_string(g_maj));
  }
  // The threshold scale is reported, not checked.
  char buf[64];
  std::snprintf(buf, sizeof buf, "THRESHOLD_3 on 8: sqrt(M(n-M+1))=%.4f", threshold_bound(8, 3));
  if (bad.empty()) return {true, std::string("all 44 values match; ") + buf};
  return {false, "mismatches: " + join(bad) + "; " + buf};
}

}  // namespace

int main() {
  report(1, "parity exact upper = deg/2", 10, parity_row);
  report(2, "adeg(PARITY_n) = n by LP", 30, parity_adeg);
  report(3, "symbolic amplitude audit", 60, symbolic_audit);
  report(4, "inequality chain, all n=4", 1800, inequality_chain);
  report(5, "Algorithm A, all n<=4", 300, algorithm_a);
  report(6, "counting P(t_hat=|x|) >= 3/4", 120, counting);
  report(7, "Grover OR min success >= 2/3", 300, grover);
  report(8, "zero-error OR witness degree", 60, zero_error_witness);
  report(9, "deg = n, symmetric, n+1 prime", 60, prime_case);
  report(10, "Gamma values of the families", 60, gamma_values);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
