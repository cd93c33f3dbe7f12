#include "qquery/qsim.hpp"

#include <algorithm>
#include <cmath>

#include "qquery/errors.hpp"
#include "qquery/polynomial.hpp"

namespace qquery {

namespace {

struct NumericAmp {
  using Amp = std::complex<double>;
  static Amp times_inv_sqrt2(const Amp& a) { return a * M_SQRT1_2; }
  static Amp times_i(const Amp& a) { return a * std::complex<double>(0, 1); }
  static Amp times_omega(const Amp& a) { return a * std::complex<double>(M_SQRT1_2, M_SQRT1_2); }
  static Amp negate(const Amp& a) { return -a; }
};

struct SymbolicAmp {
  using Amp = AmplitudePoly;
  static Amp times_inv_sqrt2(const Amp& a) { return a.scaled(RingElem::inv_sqrt2()); }
  static Amp times_i(const Amp& a) { return a.scaled(RingElem::i()); }
  static Amp times_omega(const Amp& a) { return a.scaled(RingElem::omega()); }
  static Amp negate(const Amp& a) { return a.scaled(RingElem(-1)); }
};

// Applies one of the fixed gates; returns false for CUSTOM.
template <class Traits>
bool apply_fixed_gate(std::vector<typename Traits::Amp>& s, const Circuit& c, const Gate& g) {
  using Amp = typename Traits::Amp;
  const std::uint64_t dim = s.size();
  switch (g.kind) {
    case GateKind::H: {
      const auto mask = c.qubit_mask(g.targets[0]);
      for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & mask) continue;
        Amp a0 = s[k];
        Amp a1 = s[k | mask];
        s[k] = Traits::times_inv_sqrt2(a0 + a1);
        s[k | mask] = Traits::times_inv_sqrt2(a0 - a1);
      }
      return true;
    }
    case GateKind::X: {
      const auto mask = c.qubit_mask(g.targets[0]);
      for (std::uint64_t k = 0; k < dim; ++k) {
        if (!(k & mask)) std::swap(s[k], s[k | mask]);
      }
      return true;
    }
    case GateKind::Z:
    case GateKind::S:
    case GateKind::T: {
      const auto mask = c.qubit_mask(g.targets[0]);
      for (std::uint64_t k = 0; k < dim; ++k) {
        if (!(k & mask)) continue;
        if (g.kind == GateKind::Z) {
          s[k] = Traits::negate(s[k]);
        } else if (g.kind == GateKind::S) {
          s[k] = Traits::times_i(s[k]);
        } else {
          s[k] = Traits::times_omega(s[k]);
        }
      }
      return true;
    }
    case GateKind::CNOT:
    case GateKind::CCNOT: {
      std::uint64_t controls = 0;
      for (std::size_t i = 0; i + 1 < g.targets.size(); ++i) controls |= c.qubit_mask(g.targets[i]);
      const auto mask = c.qubit_mask(g.targets.back());
      for (std::uint64_t k = 0; k < dim; ++k) {
        if ((k & controls) == controls && !(k & mask)) std::swap(s[k], s[k | mask]);
      }
      return true;
    }
    case GateKind::CZ: {
      const auto both = c.qubit_mask(g.targets[0]) | c.qubit_mask(g.targets[1]);
      for (std::uint64_t k = 0; k < dim; ++k) {
        if ((k & both) == both) s[k] = Traits::negate(s[k]);
      }
      return true;
    }
    case GateKind::CUSTOM:
      return false;
  }
  return false;
}

void apply_custom(std::vector<std::complex<double>>& s, const Circuit& c, const Gate& g) {
  const int k = static_cast<int>(g.targets.size());
  const int dim = 1 << k;
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(dim), 0);
  std::uint64_t all = 0;
  for (int r = 0; r < dim; ++r) {
    for (int j = 0; j < k; ++j) {
      if ((r >> (k - 1 - j)) & 1) offsets[static_cast<std::size_t>(r)] |= c.qubit_mask(g.targets[static_cast<std::size_t>(j)]);
    }
  }
  for (int j = 0; j < k; ++j) all |= c.qubit_mask(g.targets[static_cast<std::size_t>(j)]);
  const Matrix& mat = *g.matrix;
  std::vector<std::complex<double>> in(static_cast<std::size_t>(dim));
  for (std::uint64_t base = 0; base < s.size(); ++base) {
    if (base & all) continue;
    for (int r = 0; r < dim; ++r) in[static_cast<std::size_t>(r)] = s[base | offsets[static_cast<std::size_t>(r)]];
    for (int r = 0; r < dim; ++r) {
      std::complex<double> acc = 0;
      for (int col = 0; col < dim; ++col) {
        const auto& e = mat.at(r, col);
        if (e != 0.0) acc += e * in[static_cast<std::size_t>(col)];
      }
      s[base | offsets[static_cast<std::size_t>(r)]] = acc;
    }
  }
}

// Index value encoded on qubits 0..L-1 of basis state k, qubit 0 least
// significant.
std::uint32_t index_of(const Circuit& c, std::uint64_t k) {
  std::uint32_t i = 0;
  for (int q = 0; q < c.index_width(); ++q) {
    if (k & c.qubit_mask(q)) i |= 1u << q;
  }
  return i;
}

}  // namespace

double StateVector::norm_squared() const {
  double acc = 0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return acc;
}

double StateVector::probability(const std::function<bool(std::uint64_t)>& pred) const {
  double acc = 0;
  for (std::uint64_t k = 0; k < amplitudes.size(); ++k) {
    if (pred(k)) acc += std::norm(amplitudes[k]);
  }
  return std::clamp(acc, 0.0, 1.0);
}

double StateVector::qubit_probability(int q, bool value) const {
  const std::uint64_t mask = std::uint64_t{1} << (m - 1 - q);
  return probability([&](std::uint64_t k) { return ((k & mask) != 0) == value; });
}

StateVector simulate(const Circuit& c, std::uint32_t x) {
  if (x >> c.n() != 0 && c.n() < 32) throw ParameterError("simulate: input has more than n bits");
  StateVector st{c.m(), std::vector<std::complex<double>>(std::size_t{1} << c.m())};
  st.amplitudes[0] = 1;
  const auto bmask = c.qubit_mask(c.target_qubit());
  for (const auto& op : c.ops()) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      if (!apply_fixed_gate<NumericAmp>(st.amplitudes, c, *g)) apply_custom(st.amplitudes, c, *g);
    } else {
      for (std::uint64_t k = 0; k < st.amplitudes.size(); ++k) {
        if (k & bmask) continue;
        const auto i = index_of(c, k);
        if (i < static_cast<std::uint32_t>(c.n()) && ((x >> i) & 1u)) {
          std::swap(st.amplitudes[k], st.amplitudes[k | bmask]);
        }
      }
    }
    if (std::abs(st.norm_squared() - 1.0) > kSimTolerance) {
      throw ValidationError("state norm drifted beyond 1e-9; circuit is not unitary");
    }
  }
  return st;
}

StateVector simulate(const Circuit& c, std::string_view x) { return simulate(c, parse_bits(x, c.n())); }

AmplitudePoly SymbolicState::real_part(std::uint64_t k) const {
  return amplitudes[k].map_coeffs([](const RingElem& e) { return e.real_part(); });
}

AmplitudePoly SymbolicState::imag_part(std::uint64_t k) const {
  return amplitudes[k].map_coeffs([](const RingElem& e) { return e.imag_part(); });
}

int SymbolicState::max_degree() const {
  int d = 0;
  for (const auto& a : amplitudes) d = std::max(d, a.degree());
  return d;
}

SymbolicState symbolic_run(const Circuit& c) {
  if (c.uses_custom_gates()) {
    throw CapabilityError("symbolic_run: CUSTOM gates are outside the exact gate set");
  }
  if (c.n() > 31) throw CapabilityError("symbolic_run supports n <= 31");
  SymbolicState st;
  st.m = c.m();
  st.n = c.n();
  st.amplitudes.assign(std::size_t{1} << c.m(), AmplitudePoly(c.n()));
  st.amplitudes[0] = AmplitudePoly::constant(c.n(), RingElem::one());
  const auto bmask = c.qubit_mask(c.target_qubit());
  for (const auto& op : c.ops()) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      apply_fixed_gate<SymbolicAmp>(st.amplitudes, c, *g);
      continue;
    }
    ++st.queries;
    // |i,0,z> -> (1 - x_i) alpha + x_i beta,  |i,1,z> -> x_i alpha + (1 - x_i) beta
    for (std::uint64_t k = 0; k < st.amplitudes.size(); ++k) {
      if (k & bmask) continue;
      const auto i = index_of(c, k);
      if (i >= static_cast<std::uint32_t>(c.n())) continue;
      const auto xi = AmplitudePoly::monomial(c.n(), 1u << i, RingElem::one());
      const AmplitudePoly alpha = st.amplitudes[k];
      const AmplitudePoly beta = st.amplitudes[k | bmask];
      const AmplitudePoly diff = xi * (beta - alpha);
      st.amplitudes[k] = alpha + diff;
      st.amplitudes[k | bmask] = beta - diff;
    }
  }
  return st;
}

RealPoly acceptance_polynomial(const SymbolicState& state,
                               const std::function<bool(std::uint64_t)>& accept) {
  AmplitudePoly total(state.n);
  for (std::uint64_t k = 0; k < state.amplitudes.size(); ++k) {
    const auto& p = state.amplitudes[k];
    if (p.is_zero() || !accept(k)) continue;
    const auto conj = p.map_coeffs([](const RingElem& e) { return e.conj(); });
    total += p * conj;
  }
  RealPoly out(state.n);
  for (const auto& [mask, coeff] : total.terms()) {
    if (!coeff.is_real()) throw InconsistencyError("acceptance polynomial has an imaginary coefficient");
    out.add_term(mask, coeff.real_value());
  }
  return out;
}

RealPoly acceptance_polynomial(const Circuit& c, const std::function<bool(std::uint64_t)>& accept) {
  return acceptance_polynomial(symbolic_run(c), accept);
}

std::optional<MultilinearPoly> to_rational(const RealPoly& p) {
  MultilinearPoly out(p.n());
  for (const auto& [mask, coeff] : p.terms()) {
    if (!coeff.is_rational()) return std::nullopt;
    out.add_term(mask, coeff.rational_part());
  }
  return out;
}

std::complex<double> evaluate_complex(const AmplitudePoly& p, std::uint32_t x) {
  std::complex<double> acc = 0;
  for (const auto& [mask, coeff] : p.terms()) {
    if ((mask & ~x) == 0) acc += coeff.to_complex();
  }
  return acc;
}

std::function<bool(std::uint64_t)> output_is(const Circuit& c, bool value) {
  const auto mask = c.qubit_mask(c.output_qubit());
  return [mask, value](std::uint64_t k) { return ((k & mask) != 0) == value; };
}

std::function<bool(std::uint64_t)> zero_error_outcome(const Circuit& c, bool conclusive, bool answer) {
  if (c.m() < 2) throw ValidationError("zero-error semantics need at least 2 qubits");
  const auto flag = c.qubit_mask(c.m() - 2);
  const auto ans = c.qubit_mask(c.m() - 1);
  return [=](std::uint64_t k) { return ((k & flag) != 0) == conclusive && ((k & ans) != 0) == answer; };
}

std::string semantics_name(Semantics s) {
  switch (s) {
    case Semantics::Exact: return "exact";
    case Semantics::ZeroError: return "zero";
    case Semantics::Bounded: return "bounded";
  }
  return "?";
}

namespace {

void check_dimensions(const Circuit& c, const TruthTable& f) {
  if (c.n() != f.n()) {
    throw ValidationError("circuit has n = " + std::to_string(c.n()) + " but function has n = " +
                          std::to_string(f.n()));
  }
}

}  // namespace

CheckResult check_exact(const Circuit& c, const TruthTable& f) {
  check_dimensions(c, f);
  CheckResult r{Semantics::Exact, true, c.n(), 0, 0.0, 0.0};
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const auto st = simulate(c, x);
    const double dev = 1.0 - st.qubit_probability(c.output_qubit(), f[x]);
    if (dev > r.value) {
      r.value = dev;
      r.worst_x = x;
    }
  }
  r.pass = r.value <= kSimTolerance;
  return r;
}

CheckResult check_zero_error(const Circuit& c, const TruthTable& f) {
  check_dimensions(c, f);
  if (c.m() < 2) throw ValidationError("zero-error semantics need at least 2 qubits");
  CheckResult r{Semantics::ZeroError, true, c.n(), 0, 0.0, 0.0};
  bool wrong_found = false;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const auto st = simulate(c, x);
    const double inconclusive = st.qubit_probability(c.m() - 2, false);
    const double wrong = st.probability(zero_error_outcome(c, true, !f[x]));
    if (wrong > r.max_wrong) {
      r.max_wrong = wrong;
      if (wrong > kSimTolerance) {
        r.worst_x = x;
        wrong_found = true;
      }
    }
    if (inconclusive > r.value) {
      r.value = inconclusive;
      if (!wrong_found) r.worst_x = x;
    }
  }
  r.pass = r.max_wrong <= kSimTolerance && r.value < 0.5 + kSimTolerance;
  return r;
}

CheckResult check_bounded_error(const Circuit& c, const TruthTable& f, double threshold) {
  check_dimensions(c, f);
  CheckResult r{Semantics::Bounded, true, c.n(), 0, 1.0, 0.0};
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const auto st = simulate(c, x);
    const double success = st.qubit_probability(c.output_qubit(), f[x]);
    if (success < r.value) {
      r.value = success;
      r.worst_x = x;
    }
  }
  r.pass = r.value >= threshold - kSimTolerance;
  return r;
}

Circuit with_conclusive_flag(const Circuit& c) {
  Circuit out(c.m() + 1, c.n());
  for (const auto& op : c.ops()) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      out.add(*g);
    } else {
      out.oracle();
    }
  }
  out.swap(c.m() - 1, c.m());
  out.x(c.m() - 1);
  return out;
}

ZeroErrorWitness zero_error_witness_poly(const Circuit& c, std::optional<TruthTable> f) {
  const TruthTable target = f ? *f : from_family(Family::Or, c.n());
  if (!check_zero_error(c, target).pass) {
    throw InconsistencyError("zero_error_witness_poly: circuit is not zero-error for the target function");
  }
  const auto state = symbolic_run(c);
  const auto says_zero = zero_error_outcome(c, true, false);
  for (std::uint64_t k = 0; k < state.amplitudes.size(); ++k) {
    if (!says_zero(k)) continue;
    const RingElem at_zero = state.amplitudes[k].evaluate(0);
    if (at_zero.is_zero()) continue;
    // Re(p/c) = Re(p * conj(c)) / |c|^2
    const QSqrt2 norm = (at_zero * at_zero.conj()).real_value();
    const QSqrt2 inv = norm.inverse();
    RealPoly ratio(c.n());
    for (const auto& [mask, coeff] : state.amplitudes[k].terms()) {
      ratio.add_term(mask, (coeff * at_zero.conj()).real_value() * inv);
    }
    ZeroErrorWitness w;
    w.poly = RealPoly::constant(c.n(), QSqrt2(1)) - ratio;
    w.degree = w.poly.degree();
    w.basis_state = k;
    w.represents_or = true;
    for (std::uint32_t x = 0; x < (1u << c.n()); ++x) {
      if (!(w.poly.evaluate(x) == QSqrt2(x != 0 ? 1 : 0))) w.represents_or = false;
    }
    return w;
  }
  throw InconsistencyError("zero_error_witness_poly: no conclusive-0 basis state has p(0) != 0");
}

ZeroErrorSymmetricAudit zero_error_symmetric_audit(const Circuit& c, const TruthTable& f) {
  const auto profile = symmetric_profile(f);
  if (!profile || profile->is_constant()) {
    throw DomainError("zero_error_symmetric_audit needs a non-constant symmetric function");
  }
  if (!check_zero_error(c, f).pass) {
    throw InconsistencyError("zero_error_symmetric_audit: circuit is not zero-error for f");
  }
  const int n = f.n();
  int zeros = 0;
  for (int k = 0; k <= n; ++k) zeros += (*profile)[k] ? 0 : 1;
  ZeroErrorSymmetricAudit audit;
  // Probability of answering the minority value vanishes on the majority side.
  audit.answer = 2 * zeros >= n + 1;
  const bool vanish_value = !audit.answer;
  const auto p = acceptance_polynomial(c, zero_error_outcome(c, true, audit.answer));
  const auto rational = to_rational(p);
  if (!rational) throw CapabilityError("zero_error_symmetric_audit: acceptance polynomial is irrational");
  audit.q = symmetrize(*rational);
  audit.degree = audit.q.degree();
  audit.nonconstant = audit.q.degree() > 0;
  audit.vanishes = true;
  for (int k = 0; k <= n; ++k) {
    if ((*profile)[k] != vanish_value) continue;
    ++audit.vanishing_weights;
    if (sgn(audit.q.evaluate(Rational(k))) != 0) audit.vanishes = false;
  }
  audit.degree_bound_holds = audit.degree >= audit.vanishing_weights;
  return audit;
}

}  // namespace qquery
