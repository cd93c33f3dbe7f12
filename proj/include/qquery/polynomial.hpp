#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qquery/boolfn.hpp"
#include "qquery/multilinear.hpp"
#include "qquery/rational.hpp"
#include "qquery/univariate.hpp"

namespace qquery {

/// Largest n for the general (multivariate) approximation LP.
inline constexpr int kMaxLpVars = 4;
/// Largest n for the univariate approximation LP on symmetric profiles.
inline constexpr int kMaxSymmetricLpVars = 64;

/// The unique multilinear polynomial agreeing with f on {0,1}^n, by Moebius
/// inversion over the subset lattice.
MultilinearPoly interpolate(const TruthTable& f);

/// q with q(|X|) equal to the permutation average of p at X. Size-j
/// coefficients are averaged to get the weight a_j of the elementary
/// symmetric polynomial V_j, and q(k) = sum_j a_j * C(k, j).
UnivariatePoly symmetrize(const MultilinearPoly& p);

inline Rational one_third() { return make_rational(1, 3); }

/// Result of the best-approximation LP at a fixed degree budget.
struct LpResult {
  bool feasible = true;
  Rational min_error;
  std::variant<std::monostate, MultilinearPoly, UnivariatePoly> witness;
  int pivots = 0;
};

/// min over multilinear p with deg(p) <= d of max_X |p(X) - f(X)|, solved
/// exactly. n <= kMaxLpVars.
LpResult lp_min_error(const TruthTable& f, int d);

/// Same LP over univariate q of degree <= d against f_0..f_n.
LpResult symmetric_lp_min_error(const SymmetricProfile& profile, int d);

/// Smallest d whose LP optimum is <= eps, searching upward from 0.
int approx_degree(const TruthTable& f, const Rational& eps = one_third());
int symmetric_approx_degree(const SymmetricProfile& profile, const Rational& eps = one_third());

/// Lower bound sqrt(c n / (c + b2 - b1)) on the degree of a polynomial that
/// stays in [b1, b2] on 0..n and has derivative at least c somewhere.
double markov_bound(const Rational& b1, const Rational& b2, const Rational& c, int n);

/// Substitutes z_j = y_i (x_j = 0) or 1 - y_i (x_j = 1) for j in block B_i and
/// z_j = x_j outside all blocks; returns q(Y) = p(Z) over b = blocks.size()
/// variables. Blocks are bitmasks over p's variables.
MultilinearPoly restrict_blocks(const MultilinearPoly& p, std::uint32_t x,
                                const std::vector<std::uint32_t>& blocks);

/// True iff p(X) == f(X) exactly for every X.
bool represents(const MultilinearPoly& p, const TruthTable& f);

}  // namespace qquery
