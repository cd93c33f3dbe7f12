#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qquery/errors.hpp"
#include "qquery/rational.hpp"

namespace qquery {

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

/// Multilinear polynomial in x_0..x_{n-1} with coefficients in a commutative
/// ring C. Monomials are keyed by the bitmask of their variables; zero
/// coefficients are never stored.
///
/// C needs value-initialisation to zero, +, -, *, == and a free
/// `is_zero(const C&)`.
template <class C>
class BasicMultilinear {
 public:
  using coeff_type = C;
  using term_map = std::map<std::uint32_t, C>;

  BasicMultilinear() = default;
  explicit BasicMultilinear(int n) : n_(n) {}

  static BasicMultilinear constant(int n, const C& c) {
    BasicMultilinear p(n);
    p.add_term(0, c);
    return p;
  }

  /// The polynomial x_i (or the monomial prod_{i in mask} x_i when scaled).
  static BasicMultilinear monomial(int n, std::uint32_t mask, const C& c) {
    BasicMultilinear p(n);
    p.add_term(mask, c);
    return p;
  }

  int n() const { return n_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest monomial size with a nonzero coefficient; 0 for the zero
  /// polynomial (check is_zero() to tell it apart from a constant).
  int degree() const {
    int d = 0;
    for (const auto& [mask, c] : terms_) d = std::max(d, std::popcount(mask));
    return d;
  }

  C coeff(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(std::uint32_t mask, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      C sum = it->second + c;
      if (is_zero_coeff(sum)) {
        terms_.erase(it);
      } else {
        it->second = sum;
      }
    }
  }

  /// Value at a Boolean point: sum of coefficients over masks contained in x.
  C evaluate(std::uint32_t x) const {
    C acc{};
    for (const auto& [mask, c] : terms_) {
      if ((mask & ~x) == 0) acc = acc + c;
    }
    return acc;
  }

  BasicMultilinear& operator+=(const BasicMultilinear& o) {
    widen(o.n_);
    for (const auto& [mask, c] : o.terms_) add_term(mask, c);
    return *this;
  }

  BasicMultilinear& operator-=(const BasicMultilinear& o) {
    widen(o.n_);
    for (const auto& [mask, c] : o.terms_) add_term(mask, C{} - c);
    return *this;
  }

  BasicMultilinear scaled(const C& s) const {
    BasicMultilinear out(n_);
    for (const auto& [mask, c] : terms_) out.add_term(mask, c * s);
    return out;
  }

  /// Coefficient-wise map into another ring (or the same one).
  template <class F>
  auto map_coeffs(F&& f) const -> BasicMultilinear<decltype(f(std::declval<const C&>()))> {
    BasicMultilinear<decltype(f(std::declval<const C&>()))> out(n_);
    for (const auto& [mask, c] : terms_) out.add_term(mask, f(c));
    return out;
  }

  friend BasicMultilinear operator+(BasicMultilinear a, const BasicMultilinear& b) {
    a += b;
    return a;
  }
  friend BasicMultilinear operator-(BasicMultilinear a, const BasicMultilinear& b) {
    a -= b;
    return a;
  }

  /// Product reduced to multilinear form (x_i^2 = x_i).
  friend BasicMultilinear operator*(const BasicMultilinear& a, const BasicMultilinear& b) {
    BasicMultilinear out(std::max(a.n_, b.n_));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma | mb, ca * cb);
    }
    return out;
  }

  friend bool operator==(const BasicMultilinear& a, const BasicMultilinear& b) {
    return a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_coeff(const C& c) { return detail::coeff_is_zero(c); }
  void widen(int n) { n_ = std::max(n_, n); }

  int n_ = 0;
  term_map terms_;
};

using MultilinearPoly = BasicMultilinear<Rational>;

/// degree() together with the zero flag, for reporting.
struct DegreeInfo {
  int value = 0;
  bool zero = false;
};

template <class C>
DegreeInfo degree_info(const BasicMultilinear<C>& p) {
  return {p.degree(), p.is_zero()};
}

}  // namespace qquery
