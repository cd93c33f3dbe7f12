#include "qquery/univariate.hpp"

#include <sstream>

#include "qquery/qsqrt2.hpp"

namespace qquery {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::binomial(int j) {
  UnivariatePoly p(std::vector<Rational>{Rational(1)});
  for (int r = 0; r < j; ++r) p = p * UnivariatePoly({Rational(-r), Rational(1)});
  Rational fact(1);
  for (int r = 2; r <= j; ++r) fact *= r;
  return p.scaled(1 / fact);
}

Rational UnivariatePoly::evaluate(const Rational& k) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& s) const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c *= s;
  return UnivariatePoly(std::move(out));
}

std::string UnivariatePoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].get_str() << ")";
    if (i > 0) os << "*k";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

QSqrt2 QSqrt2::inverse() const {
  // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2); the norm vanishes only at zero.
  const Rational norm = a_ * a_ - 2 * b_ * b_;
  if (sgn(norm) == 0) throw std::domain_error("QSqrt2: division by zero");
  return {Rational(a_ / norm), Rational(-b_ / norm)};
}

std::string QSqrt2::to_string() const {
  if (is_rational()) return a_.get_str();
  return a_.get_str() + "+" + b_.get_str() + "*sqrt2";
}

}  // namespace qquery
