#pragma once

#include <cmath>
#include <string>

#include "qquery/rational.hpp"

namespace qquery {

/// Element a + b*sqrt(2) of the field Q(sqrt 2). Real parts of products of
/// circuit amplitudes land here, and so does division by them.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
  explicit QSqrt2(long a) : a_(a) {}

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }

  double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

  QSqrt2 inverse() const;

  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
    return {Rational(x.a_ + y.a_), Rational(x.b_ + y.b_)};
  }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
    return {Rational(x.a_ - y.a_), Rational(x.b_ - y.b_)};
  }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {Rational(x.a_ * y.a_ + 2 * x.b_ * y.b_), Rational(x.a_ * y.b_ + x.b_ * y.a_)};
  }
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

inline bool is_zero(const QSqrt2& x) { return sgn(x.rational_part()) == 0 && x.is_rational(); }

}  // namespace qquery
