#pragma once

#include <string>
#include <vector>

#include "qquery/rational.hpp"

namespace qquery {

/// Polynomial in one variable over Q, monomial basis, low degree first. The
/// coefficient list is trimmed so the last entry is nonzero; the zero
/// polynomial has an empty list.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs);

  /// k(k-1)...(k-j+1)/j!
  static UnivariatePoly binomial(int j);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& k) const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  UnivariatePoly scaled(const Rational& s) const;

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace qquery
