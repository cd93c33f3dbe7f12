#include "qquery/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qquery/errors.hpp"
#include "qquery/qsim.hpp"

namespace qquery {

namespace {

constexpr double kTwoThirds = 2.0 / 3.0;
constexpr double kScheduleSlack = 1e-12;

void set_index(Circuit& c, int value) {
  for (int q = 0; q < c.index_width(); ++q) {
    if ((value >> q) & 1) c.x(q);
  }
}

int lowest_bit(int v) {
  int q = 0;
  while (!((v >> q) & 1)) ++q;
  return q;
}

void prepare_pair(Circuit& c, int i, int j) {
  const int d = i ^ j;
  const int p = lowest_bit(d);
  c.h(p);
  for (int q = 0; q < c.index_width(); ++q) {
    if (q != p && ((d >> q) & 1)) c.cnot(p, q);
  }
  set_index(c, i);
}

void unprepare_pair(Circuit& c, int i, int j) {
  const int d = i ^ j;
  const int p = lowest_bit(d);
  set_index(c, i);
  for (int q = c.index_width() - 1; q >= 0; --q) {
    if (q != p && ((d >> q) & 1)) c.cnot(p, q);
  }
  c.h(p);
}

// Leaves x_i xor x_j on the returned index qubit; b must hold |->.
int xor_gadget(Circuit& c, int i, int j) {
  prepare_pair(c, i, j);
  c.oracle();
  unprepare_pair(c, i, j);
  return lowest_bit(i ^ j);
}

void minus_state(Circuit& c, int q) { c.x(q).h(q); }
void undo_minus_state(Circuit& c, int q) { c.h(q).x(q); }

// t := u or v, leaving u and v unchanged.
void or_into(Circuit& c, int u, int v, int t) {
  c.x(u).x(v).ccnot(u, v, t).x(t).x(u).x(v);
}

Matrix diffusion_matrix(int n) {
  Matrix d{n, std::vector<std::complex<double>>(static_cast<std::size_t>(n) * n)};
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) d.at(r, col) = 2.0 / n - (r == col ? 1.0 : 0.0);
  }
  return d;
}

Matrix controlled(const Matrix& u) {
  Matrix out = Matrix::identity(2 * u.dim);
  for (int r = 0; r < u.dim; ++r) {
    for (int col = 0; col < u.dim; ++col) out.at(u.dim + r, u.dim + col) = u.at(r, col);
  }
  return out;
}

Matrix inverse_qft(int dim) {
  Matrix f{dim, std::vector<std::complex<double>>(static_cast<std::size_t>(dim) * dim)};
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int r = 0; r < dim; ++r) {
    for (int col = 0; col < dim; ++col) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((r * col) % dim) / dim;
      f.at(r, col) = std::polar(scale, angle);
    }
  }
  return f;
}

// Index register as targets with the most significant index bit first, so the
// matrix index equals the register value.
std::vector<int> index_targets(const Circuit& c) {
  std::vector<int> t;
  for (int q = c.index_width() - 1; q >= 0; --q) t.push_back(q);
  return t;
}

void grover_iterations(Circuit& c, int iterations) {
  const Matrix d = diffusion_matrix(c.n());
  for (int k = 0; k < iterations; ++k) {
    c.oracle();
    c.custom(index_targets(c), d);
  }
}

void require_power_of_two(const std::string& op, int n, std::initializer_list<int> supported) {
  if (std::find(supported.begin(), supported.end(), n) == supported.end()) {
    std::string list;
    for (int s : supported) list += (list.empty() ? "" : ", ") + std::to_string(s);
    throw CapabilityError(op + ": n = " + std::to_string(n) + " not in {" + list + "}");
  }
}

double run_success(int n, int t, int iterations) {
  const double theta = std::asin(std::sqrt(static_cast<double>(t) / n));
  const double s = std::sin((2 * iterations + 1) * theta);
  return s * s;
}

std::uint32_t index_value(const Circuit& c, std::uint64_t k) {
  std::uint32_t i = 0;
  for (int q = 0; q < c.index_width(); ++q) {
    if (k & c.qubit_mask(q)) i |= 1u << q;
  }
  return i;
}

double majority_success(double p, int r) {
  double total = 0;
  for (int k = r / 2 + 1; k <= r; ++k) {
    double binom = 1;
    for (int j = 0; j < k; ++j) binom = binom * (r - j) / (j + 1);
    total += binom * std::pow(p, k) * std::pow(1 - p, r - k);
  }
  return total;
}

}  // namespace

Circuit xor_circuit(int n, int i, int j) {
  if (n < 2) throw ParameterError("xor_circuit needs n >= 2");
  if (i < 0 || j < 0 || i >= n || j >= n) throw ParameterError("xor_circuit index out of range");
  if (i == j) throw ParameterError("xor_circuit needs i != j");
  const int width = ceil_log2(n);
  Circuit c(width + 2, n);
  minus_state(c, c.target_qubit());
  const int p = xor_gadget(c, i, j);
  c.cnot(p, c.output_qubit());
  return c;
}

Circuit parity_circuit(int n) {
  if (n < 1) throw ParameterError("parity_circuit needs n >= 1");
  const int width = ceil_log2(n);
  const int pairs = n / 2;
  const bool odd = n % 2 == 1;
  // Every pair but the last leaves its pivot in a garbage qubit; with odd n the
  // last pair does too, so the index register is clean for the raw query.
  const int garbage = odd ? pairs : std::max(pairs - 1, 0);
  const int m = width + 1 + garbage + 1;
  require_capability(m <= kMaxQubits, "parity_circuit", n, n);
  Circuit c(m, n);
  const int b = c.target_qubit();
  const int out = c.output_qubit();
  if (pairs > 0) minus_state(c, b);
  for (int k = 0; k < pairs; ++k) {
    const int p = xor_gadget(c, 2 * k, 2 * k + 1);
    c.cnot(p, out);
    if (k < garbage) c.swap(p, b + 1 + k);
  }
  if (odd) {
    if (pairs > 0) undo_minus_state(c, b);
    set_index(c, n - 1);
    c.oracle();
    c.cnot(b, out);
  }
  return c;
}

Circuit zero_error_or_circuit(int n) {
  if (n < 1) throw ParameterError("zero_error_or_circuit needs n >= 1");
  const int width = ceil_log2(n);
  const int chain = std::max(n - 2, 0);
  const int m = width + 1 + n + chain + 2;
  require_capability(m <= kMaxQubits, "zero_error_or_circuit", n, 8);
  Circuit c(m, n);
  const int b = c.target_qubit();
  const int w0 = b + 1;
  const int acc0 = w0 + n;
  const int flag = m - 2;
  const int ans = m - 1;
  for (int i = 0; i < n; ++i) {
    set_index(c, i);
    c.oracle();
    set_index(c, i);
    c.swap(b, w0 + i);
  }
  if (n == 1) {
    c.cnot(w0, ans);
  } else {
    int prev = w0;
    for (int k = 1; k < n; ++k) {
      const int target = k == n - 1 ? ans : acc0 + k - 1;
      or_into(c, prev, w0 + k, target);
      prev = target;
    }
  }
  c.x(flag);
  return c;
}

int GroverSchedule::budget() const {
  int total = 0;
  for (int j : iterations) total += j + 1;
  return total;
}

namespace {

double schedule_worst_case(int n, const std::vector<int>& iterations) {
  double worst = 1.0;
  for (int t = 1; t <= n; ++t) {
    double miss = 1.0;
    for (int j : iterations) miss *= 1 - run_success(n, t, j);
    worst = std::min(worst, 1 - miss);
  }
  return worst;
}

// Non-decreasing tuples of `runs` counts summing to `total`, in lex order.
bool first_passing(int n, int runs, int total, int floor, std::vector<int>& prefix) {
  if (runs == 1) {
    if (total < floor) return false;
    prefix.push_back(total);
    if (schedule_worst_case(n, prefix) >= kTwoThirds - kScheduleSlack) return true;
    prefix.pop_back();
    return false;
  }
  for (int j = floor; j * runs <= total; ++j) {
    prefix.push_back(j);
    if (first_passing(n, runs - 1, total - j, j, prefix)) return true;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

GroverSchedule search_grover_schedule(int n) {
  if (n < 1) throw ParameterError("search_grover_schedule needs n >= 1");
  for (int budget = kMinGroverRuns;; ++budget) {
    for (int runs = kMinGroverRuns; runs <= std::min(kMaxGroverRuns, budget); ++runs) {
      std::vector<int> iterations;
      if (first_passing(n, runs, budget - runs, 0, iterations)) return {iterations};
    }
  }
}

GroverSchedule shipped_grover_schedule(int n) {
  require_power_of_two("grover_or", n, {4, 8, 16});
  switch (n) {
    case 4: return {{0, 1}};
    case 8: return {{0, 1}};
    default: return {{0, 1, 1}};
  }
}

Circuit grover_run_circuit(int n, int iterations) {
  if (iterations < 0) throw ParameterError("iteration count must be non-negative");
  Circuit c(ceil_log2(n) + 1, n);
  for (int q = 0; q < c.index_width(); ++q) c.h(q);
  minus_state(c, c.target_qubit());
  grover_iterations(c, iterations);
  return c;
}

Circuit grover_or_circuit(int n, const GroverSchedule& schedule) {
  require_power_of_two("grover_or", n, {4, 8, 16});
  const int runs = static_cast<int>(schedule.iterations.size());
  if (runs < 1) throw ParameterError("Grover schedule has no runs");
  const int width = ceil_log2(n);
  const int chain = std::max(runs - 2, 0);
  const int m = width + 1 + (runs - 1) * width + runs + chain + 1;
  require_capability(m <= kMaxQubits, "grover_or_circuit", n, n);
  Circuit c(m, n);
  const int b = c.target_qubit();
  const int spare = b + 1;
  const int verify = spare + (runs - 1) * width;
  const int acc = verify + runs;
  for (int r = 0; r < runs; ++r) {
    for (int q = 0; q < width; ++q) c.h(q);
    minus_state(c, b);
    grover_iterations(c, schedule.iterations[static_cast<std::size_t>(r)]);
    undo_minus_state(c, b);
    c.oracle();
    c.swap(b, verify + r);
    // Park this run's index so the next run starts from |0>.
    if (r + 1 < runs) {
      for (int q = 0; q < width; ++q) c.swap(q, spare + r * width + q);
    }
  }
  if (runs == 1) {
    c.cnot(verify, c.output_qubit());
  } else {
    int prev = verify;
    for (int r = 1; r < runs; ++r) {
      const int target = r == runs - 1 ? c.output_qubit() : acc + r - 1;
      or_into(c, prev, verify + r, target);
      prev = target;
    }
  }
  return c;
}

GroverOr::GroverOr(int n, std::optional<GroverSchedule> schedule)
    : n_(n), schedule_(schedule ? *schedule : shipped_grover_schedule(n)) {
  require_power_of_two("grover_or", n, {4, 8, 16});
  if (schedule_.iterations.empty()) throw ParameterError("Grover schedule has no runs");
  for (int j : schedule_.iterations) runs_.push_back(grover_run_circuit(n, j));
}

std::vector<double> GroverOr::index_distribution(std::size_t run, std::uint32_t x) const {
  const Circuit& c = runs_.at(run);
  const auto st = simulate(c, x);
  std::vector<double> dist(static_cast<std::size_t>(n_), 0.0);
  for (std::uint64_t k = 0; k < st.amplitudes.size(); ++k) {
    dist[index_value(c, k)] += std::norm(st.amplitudes[k]);
  }
  return dist;
}

double GroverOr::success_probability(std::uint32_t x) const {
  double miss = 1.0;
  for (std::size_t r = 0; r < runs_.size(); ++r) {
    const auto dist = index_distribution(r, x);
    double hit = 0;
    for (int i = 0; i < n_; ++i) {
      if ((x >> i) & 1) hit += dist[static_cast<std::size_t>(i)];
    }
    miss *= 1 - hit;
  }
  return x == 0 ? 1.0 : 1.0 - miss;
}

GroverOr::Outcome GroverOr::run(std::uint32_t x, std::mt19937_64& rng) const {
  Outcome out;
  for (std::size_t r = 0; r < runs_.size(); ++r) {
    const auto dist = index_distribution(r, x);
    std::discrete_distribution<std::uint32_t> pick(dist.begin(), dist.end());
    const std::uint32_t i = pick(rng);
    out.candidates.push_back(i);
    out.queries += schedule_.iterations[r] + 1;
    if ((x >> i) & 1) {
      out.value = true;
      break;
    }
  }
  return out;
}

int default_counting_precision(int n) { return ceil_log2(n) + 3; }

CountingCircuit counting_circuit(int n, std::optional<int> precision) {
  require_power_of_two("counting_circuit", n, {4, 8});
  const int width = ceil_log2(n);
  const int p = precision.value_or(default_counting_precision(n));
  if (p < 1) throw ParameterError("counting precision must be >= 1");
  require_capability(width + 1 + p <= kMaxQubits, "counting_circuit precision", p, kMaxQubits - width - 1);
  Circuit c(width + 1 + p, n);
  const int b = c.target_qubit();
  for (int q = 0; q < width; ++q) c.h(q);
  c.h(b);
  for (int j = 0; j < p; ++j) c.h(b + 1 + j);

  const Matrix cd = controlled(diffusion_matrix(n));
  for (int j = 0; j < p; ++j) {
    const int ctrl = b + 1 + j;
    std::vector<int> targets{ctrl};
    for (int q : index_targets(c)) targets.push_back(q);
    for (int k = 0; k < (1 << j); ++k) {
      // b rests in |+>; flipping it to |-> only under the control turns the
      // bit oracle into a controlled phase oracle.
      c.cz(ctrl, b);
      c.oracle();
      c.cz(ctrl, b);
      c.custom(targets, cd);
    }
  }
  std::vector<int> register_targets;
  for (int j = p - 1; j >= 0; --j) register_targets.push_back(b + 1 + j);
  c.custom(register_targets, inverse_qft(1 << p));

  CountingCircuit cc{std::move(c), n, p, {}};
  for (int y = 0; y < (1 << p); ++y) {
    const double s = std::sin(std::numbers::pi * y / (1 << p));
    cc.decoder.push_back(static_cast<int>(std::lround(n * s * s)));
  }
  return cc;
}

CountingOutcome counting_distribution(const CountingCircuit& cc, std::uint32_t x) {
  const auto st = simulate(cc.circuit, x);
  CountingOutcome out;
  out.distribution.assign(static_cast<std::size_t>(cc.n) + 1, 0.0);
  out.queries = cc.queries();
  const int first = cc.circuit.target_qubit() + 1;
  for (std::uint64_t k = 0; k < st.amplitudes.size(); ++k) {
    int y = 0;
    for (int j = 0; j < cc.precision; ++j) {
      if (k & cc.circuit.qubit_mask(first + j)) y |= 1 << j;
    }
    out.distribution[static_cast<std::size_t>(cc.decoder[static_cast<std::size_t>(y)])] += std::norm(st.amplitudes[k]);
  }
  out.estimate = static_cast<int>(std::max_element(out.distribution.begin(), out.distribution.end()) -
                                  out.distribution.begin());
  return out;
}

std::vector<double> counting_success_by_weight(const CountingCircuit& cc) {
  std::vector<double> worst(static_cast<std::size_t>(cc.n) + 1, 1.0);
  for (std::uint32_t x = 0; x < (1u << cc.n); ++x) {
    const int t = std::popcount(x);
    const auto out = counting_distribution(cc, x);
    worst[static_cast<std::size_t>(t)] = std::min(worst[static_cast<std::size_t>(t)], out.distribution[static_cast<std::size_t>(t)]);
  }
  return worst;
}

namespace {

const SymmetricProfile& checked_profile(const SymmetricProfile& profile, int repetitions) {
  if (profile.is_constant()) throw DomainError("symmetric_eval needs a non-constant profile");
  if (repetitions < 1 || repetitions % 2 == 0) throw ParameterError("repetition count must be odd and >= 1");
  return profile;
}

}  // namespace

SymmetricEvaluator::SymmetricEvaluator(SymmetricProfile profile, int repetitions, std::optional<int> precision)
    : profile_(checked_profile(profile, repetitions)),
      repetitions_(repetitions),
      band_(gamma_band(profile_)),
      counter_(counting_circuit(profile_.n, precision)) {}

bool SymmetricEvaluator::decide(int estimate) const {
  if (!band_.empty() && estimate >= band_.front() && estimate <= band_.back()) {
    return profile_[band_.front()];
  }
  return profile_[estimate];
}

SymmetricEvalResult SymmetricEvaluator::evaluate(std::uint32_t x, std::mt19937_64& rng) const {
  const bool truth = profile_[std::popcount(x)];
  const auto counted = counting_distribution(counter_, x);
  SymmetricEvalResult r;
  for (int t = 0; t <= profile_.n; ++t) {
    if (decide(t) == truth) r.round_success += counted.distribution[static_cast<std::size_t>(t)];
  }
  r.success = majority_success(r.round_success, repetitions_);
  std::discrete_distribution<int> sample(counted.distribution.begin(), counted.distribution.end());
  int ones = 0;
  for (int k = 0; k < repetitions_; ++k) {
    const int t = sample(rng);
    r.estimates.push_back(t);
    ones += decide(t) ? 1 : 0;
  }
  r.value = 2 * ones > repetitions_;
  r.queries = repetitions_ * counted.queries;
  return r;
}

SymmetricEvalResult symmetric_eval(const SymmetricProfile& profile, std::uint32_t x, std::uint64_t seed,
                                   int repetitions) {
  SymmetricEvaluator eval(profile, repetitions);
  std::mt19937_64 rng(seed);
  return eval.evaluate(x, rng);
}

}  // namespace qquery
