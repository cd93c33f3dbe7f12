#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "qquery/qsqrt2.hpp"

namespace qquery {

/// Exact element (a + b*r + (c + d*r) i) / r^e of Z[i, 1/sqrt 2], with
/// r = sqrt 2. Stored in canonical form: e >= 0 is as small as possible and
/// zero has e = 0. Closed under the entries of H, X, Z, S, T, CNOT, CCNOT, CZ.
///
/// Integer parts are 64-bit; arithmetic that would overflow throws
/// std::overflow_error rather than wrapping.
class RingElem {
 public:
  RingElem() = default;
  RingElem(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int e);
  explicit RingElem(std::int64_t integer) : RingElem(integer, 0, 0, 0, 0) {}

  static RingElem zero() { return {}; }
  static RingElem one() { return RingElem(1); }
  static RingElem i() { return {0, 0, 1, 0, 0}; }
  static RingElem inv_sqrt2() { return {1, 0, 0, 0, 1}; }
  /// e^{i pi/4} = (1 + i)/sqrt 2
  static RingElem omega() { return {1, 0, 1, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  int e() const { return e_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_real() const { return c_ == 0 && d_ == 0; }

  RingElem conj() const { return {a_, b_, -c_, -d_, e_}; }
  RingElem real_part() const { return {a_, b_, 0, 0, e_}; }
  RingElem imag_part() const { return {c_, d_, 0, 0, e_}; }

  /// The real part as an element of Q(sqrt 2).
  QSqrt2 real_value() const;
  std::complex<double> to_complex() const;

  friend RingElem operator+(const RingElem& x, const RingElem& y);
  friend RingElem operator-(const RingElem& x, const RingElem& y);
  friend RingElem operator*(const RingElem& x, const RingElem& y);
  RingElem operator-() const { return {-a_, -b_, -c_, -d_, e_}; }

  friend bool operator==(const RingElem&, const RingElem&) = default;

  std::string to_string() const;

 private:
  void normalize();
  /// Same value with denominator exponent raised to `target` >= e_.
  RingElem rescaled(int target) const;

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t c_ = 0;
  std::int64_t d_ = 0;
  int e_ = 0;
};

inline bool is_zero(const RingElem& x) { return x.is_zero(); }

}  // namespace qquery
