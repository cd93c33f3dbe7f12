#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qquery/boolfn.hpp"
#include "qquery/circuit.hpp"
#include "qquery/multilinear.hpp"
#include "qquery/qsqrt2.hpp"
#include "qquery/ring.hpp"
#include "qquery/univariate.hpp"

namespace qquery {

/// Numeric tolerance used by every check in the simulator.
inline constexpr double kSimTolerance = 1e-9;

struct StateVector {
  int m = 0;
  std::vector<std::complex<double>> amplitudes;

  double norm_squared() const;
  /// Probability that the measured basis state satisfies `pred`.
  double probability(const std::function<bool(std::uint64_t)>& pred) const;
  /// Probability of reading `value` on qubit q.
  double qubit_probability(int q, bool value) const;
};

/// Runs c on input x from |0...0>. Throws ValidationError if the norm drifts
/// by more than kSimTolerance after any op.
StateVector simulate(const Circuit& c, std::uint32_t x);
StateVector simulate(const Circuit& c, std::string_view x);

using AmplitudePoly = BasicMultilinear<RingElem>;
using RealPoly = BasicMultilinear<QSqrt2>;

/// Final amplitude of every basis state as an exact polynomial in x.
struct SymbolicState {
  int m = 0;
  int n = 0;
  int queries = 0;
  std::vector<AmplitudePoly> amplitudes;

  AmplitudePoly real_part(std::uint64_t k) const;
  AmplitudePoly imag_part(std::uint64_t k) const;
  int max_degree() const;
};

/// Exact symbolic execution. CUSTOM gates throw CapabilityError.
SymbolicState symbolic_run(const Circuit& c);

/// P(X) = sum over k in B of |p_k(X)|^2, reduced to multilinear form.
RealPoly acceptance_polynomial(const SymbolicState& state,
                               const std::function<bool(std::uint64_t)>& accept);
RealPoly acceptance_polynomial(const Circuit& c, const std::function<bool(std::uint64_t)>& accept);

/// Rational copy if every coefficient is rational.
std::optional<MultilinearPoly> to_rational(const RealPoly& p);

std::complex<double> evaluate_complex(const AmplitudePoly& p, std::uint32_t x);

/// Basis-state predicates for the standard output conventions.
std::function<bool(std::uint64_t)> output_is(const Circuit& c, bool value);
/// Zero-error outputs: the flag (qubit m-2) equals `conclusive` and the answer
/// (qubit m-1) equals `answer`.
std::function<bool(std::uint64_t)> zero_error_outcome(const Circuit& c, bool conclusive, bool answer);

enum class Semantics { Exact, ZeroError, Bounded };
std::string semantics_name(Semantics s);

struct CheckResult {
  Semantics semantics = Semantics::Exact;
  bool pass = false;
  int n = 0;
  /// Input with the worst value below.
  std::uint32_t worst_x = 0;
  /// Exact: max deviation 1 - P(output = f(x)). Zero-error: max inconclusive
  /// probability. Bounded: min success probability.
  double value = 0;
  /// Zero-error only: max probability of a conclusive wrong answer.
  double max_wrong = 0;
};

CheckResult check_exact(const Circuit& c, const TruthTable& f);
CheckResult check_zero_error(const Circuit& c, const TruthTable& f);
CheckResult check_bounded_error(const Circuit& c, const TruthTable& f, double threshold = 2.0 / 3.0);

/// Appends a qubit, moves the output onto it and sets the new flag qubit
/// (m - 2) to 1, so the circuit always claims to be conclusive.
Circuit with_conclusive_flag(const Circuit& c);

/// Witness that a zero-error OR circuit makes at least n queries: the real
/// part of 1 - p_k'(X)/p_k'(0) for the first basis state k' reading
/// "conclusive, 0" with p_k'(0) != 0.
struct ZeroErrorWitness {
  RealPoly poly;
  int degree = 0;
  std::uint64_t basis_state = 0;
  bool represents_or = false;
};

/// Throws InconsistencyError when c is not a zero-error circuit for f (which
/// defaults to OR_n) or no usable basis state exists.
ZeroErrorWitness zero_error_witness_poly(const Circuit& c, std::optional<TruthTable> f = std::nullopt);

/// The zero-count argument for a zero-error circuit on symmetric f: the
/// symmetrized probability of answering the minority value vanishes on every
/// majority-value weight, so its degree is at least the number of those
/// weights.
struct ZeroErrorSymmetricAudit {
  UnivariatePoly q;
  /// Which conclusive answer's probability was symmetrized.
  bool answer = true;
  int vanishing_weights = 0;
  bool nonconstant = false;
  bool vanishes = false;
  int degree = 0;
  bool degree_bound_holds = false;
};

ZeroErrorSymmetricAudit zero_error_symmetric_audit(const Circuit& c, const TruthTable& f);

}  // namespace qquery
