#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qquery/boolfn.hpp"
#include "qquery/circuit.hpp"

namespace qquery {

/// One-query circuit computing x_i xor x_j exactly: put the index register in
/// (|i> + |j>)/sqrt 2, kick the oracle phase back through b = |->, and
/// interfere the two branches. Layout: index, b, output (m = L + 2).
Circuit xor_circuit(int n, int i, int j);

/// PARITY_n with ceil(n/2) queries: an XOR gadget per pair (x_0,x_1),
/// (x_2,x_3), ... accumulated into the output, plus one plain query on
/// x_{n-1} when n is odd.
Circuit parity_circuit(int n);

/// Reference zero-error (and exact) OR circuit: queries every x_i into its own
/// workspace bit, ORs them into the answer and raises the conclusive flag.
/// Uses n queries.
Circuit zero_error_or_circuit(int n);

/// Grover iteration counts for the OR driver. Each run makes `iterations[r]`
/// Grover iterations and then one query to check the measured index.
struct GroverSchedule {
  std::vector<int> iterations;

  int budget() const;
  friend bool operator==(const GroverSchedule&, const GroverSchedule&) = default;
};

inline constexpr int kMinGroverRuns = 2;
inline constexpr int kMaxGroverRuns = 4;

/// Cheapest schedule whose worst-case success over every solution count
/// t = 1..n is at least 2/3, from the closed form sin^2((2j + 1) theta_t) with
/// sin^2 theta_t = t/n. Minimizes the budget, then the number of runs (2 to 4),
/// then the iteration counts lexicographically (non-decreasing).
GroverSchedule search_grover_schedule(int n);

/// Frozen output of search_grover_schedule for the supported sizes.
GroverSchedule shipped_grover_schedule(int n);

/// Single Grover run: uniform index superposition, b = |->, then `iterations`
/// rounds of oracle + inversion about the mean. m = L + 1; the caller measures
/// the index register.
Circuit grover_run_circuit(int n, int iterations);

/// The whole OR driver as one coherent circuit: each run's measured index is
/// replaced by a query into a verification bit, the index register is swapped
/// out for a fresh one, and the output is the OR of the verification bits.
/// Layout: index, b, parked index registers, verification bits, OR chain, output.
Circuit grover_or_circuit(int n, const GroverSchedule& schedule);

/// Classical driver around grover_run_circuit.
class GroverOr {
 public:
  struct Outcome {
    bool value = false;
    int queries = 0;
    std::vector<std::uint32_t> candidates;
  };

  explicit GroverOr(int n, std::optional<GroverSchedule> schedule = std::nullopt);

  int n() const { return n_; }
  const GroverSchedule& schedule() const { return schedule_; }
  int queries() const { return schedule_.budget(); }

  /// Probability the driver outputs OR(x), computed from the statevectors.
  double success_probability(std::uint32_t x) const;
  /// Distribution of the measured index after run r.
  std::vector<double> index_distribution(std::size_t run, std::uint32_t x) const;

  Outcome run(std::uint32_t x, std::mt19937_64& rng) const;

 private:
  int n_;
  GroverSchedule schedule_;
  std::vector<Circuit> runs_;
};

/// Phase estimation on the Grover iterate with `precision` ancillas. Layout:
/// index (L qubits), b, ancillas; ancilla j controls G^(2^j). The ancilla
/// register, read as y = sum_j y_j 2^j, decodes to round(n sin^2(pi y / 2^p)).
struct CountingCircuit {
  Circuit circuit;
  int n = 0;
  int precision = 0;
  /// decoder[y] = estimated count for measured ancilla value y.
  std::vector<int> decoder;

  int queries() const { return circuit.query_count(); }
};

int default_counting_precision(int n);
CountingCircuit counting_circuit(int n, std::optional<int> precision = std::nullopt);

struct CountingOutcome {
  /// Most likely estimate.
  int estimate = 0;
  /// P(estimate = t) for t = 0..n.
  std::vector<double> distribution;
  int queries = 0;
};

CountingOutcome counting_distribution(const CountingCircuit& cc, std::uint32_t x);

/// min over inputs of weight t of P(estimate = t), for every t = 0..n.
std::vector<double> counting_success_by_weight(const CountingCircuit& cc);

/// Bounded-error strategy for a symmetric function: count with the circuit
/// above; an estimate outside the flat middle band decides f directly, one
/// inside it yields the band's constant value. Repeated with a majority vote.
struct SymmetricEvalResult {
  bool value = false;
  int queries = 0;
  std::vector<int> estimates;
  /// Exact probability that a single round answers f(x) correctly.
  double round_success = 0;
  /// Exact probability that the majority vote is correct.
  double success = 0;
};

class SymmetricEvaluator {
 public:
  explicit SymmetricEvaluator(SymmetricProfile profile, int repetitions = 3,
                              std::optional<int> precision = std::nullopt);

  const SymmetricProfile& profile() const { return profile_; }
  int repetitions() const { return repetitions_; }
  const std::vector<int>& band() const { return band_; }

  bool decide(int estimate) const;
  SymmetricEvalResult evaluate(std::uint32_t x, std::mt19937_64& rng) const;

 private:
  SymmetricProfile profile_;
  int repetitions_;
  std::vector<int> band_;
  CountingCircuit counter_;
};

SymmetricEvalResult symmetric_eval(const SymmetricProfile& profile, std::uint32_t x, std::uint64_t seed,
                                   int repetitions = 3);

}  // namespace qquery
