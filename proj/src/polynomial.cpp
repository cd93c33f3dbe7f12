#include "qquery/polynomial.hpp"

#include <bit>
#include <cmath>

#include "qquery/errors.hpp"
#include "qquery/simplex.hpp"

namespace qquery {

namespace {

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Both LPs share one shape: columns are (coef_j^+, coef_j^-) pairs followed by
// delta = 1 - eps, rows are  v(point) + delta <= target + 1  and
// -v(point) + delta <= 1 - target. The origin is feasible and delta* gives
// eps* = 1 - delta*.
struct ApproxLp {
  CanonicalLp lp;
  std::size_t basis_size = 0;
};

ApproxLp build_approx_lp(const std::vector<std::vector<Rational>>& design,
                         const std::vector<int>& targets) {
  ApproxLp out;
  out.basis_size = design.empty() ? 0 : design.front().size();
  const std::size_t vars = 2 * out.basis_size + 1;
  out.lp.c.assign(vars, Rational(0));
  out.lp.c.back() = 1;
  for (std::size_t p = 0; p < design.size(); ++p) {
    std::vector<Rational> upper(vars);
    std::vector<Rational> lower(vars);
    for (std::size_t j = 0; j < out.basis_size; ++j) {
      upper[2 * j] = design[p][j];
      upper[2 * j + 1] = -design[p][j];
      lower[2 * j] = -design[p][j];
      lower[2 * j + 1] = design[p][j];
    }
    upper.back() = 1;
    lower.back() = 1;
    out.lp.a.push_back(std::move(upper));
    out.lp.b.emplace_back(targets[p] + 1);
    out.lp.a.push_back(std::move(lower));
    out.lp.b.emplace_back(1 - targets[p]);
  }
  return out;
}

std::vector<Rational> coefficients(const LpSolution& sol, std::size_t basis_size) {
  std::vector<Rational> coef(basis_size);
  for (std::size_t j = 0; j < basis_size; ++j) coef[j] = sol.x[2 * j] - sol.x[2 * j + 1];
  return coef;
}

}  // namespace

MultilinearPoly interpolate(const TruthTable& f) {
  const int n = f.n();
  std::vector<long> c(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) c[x] = f[x] ? 1 : 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t mask = 0; mask < f.size(); ++mask) {
      if (mask & bit) c[mask] -= c[mask ^ bit];
    }
  }
  MultilinearPoly p(n);
  for (std::uint32_t mask = 0; mask < f.size(); ++mask) p.add_term(mask, Rational(c[mask]));
  return p;
}

UnivariatePoly symmetrize(const MultilinearPoly& p) {
  const int n = p.n();
  std::vector<Rational> size_sums(static_cast<std::size_t>(n) + 1);
  for (const auto& [mask, c] : p.terms()) size_sums[static_cast<std::size_t>(std::popcount(mask))] += c;
  UnivariatePoly q;
  for (int j = 0; j <= n; ++j) {
    const auto& s = size_sums[static_cast<std::size_t>(j)];
    if (sgn(s) == 0) continue;
    Rational a_j = s / Rational(binomial(n, j));
    q += UnivariatePoly::binomial(j).scaled(a_j);
  }
  return q;
}

LpResult lp_min_error(const TruthTable& f, int d) {
  const int n = f.n();
  require_capability(n <= kMaxLpVars, "lp_min_error", n, kMaxLpVars);
  if (d < 0 || d > n) throw ParameterError("lp_min_error: degree budget must be in [0, n]");

  std::vector<std::uint32_t> monomials;
  for (std::uint32_t mask = 0; mask < f.size(); ++mask) {
    if (std::popcount(mask) <= d) monomials.push_back(mask);
  }
  std::vector<std::vector<Rational>> design(f.size(), std::vector<Rational>(monomials.size()));
  std::vector<int> targets(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      design[x][j] = (monomials[j] & ~x) == 0 ? 1 : 0;
    }
    targets[x] = f[x] ? 1 : 0;
  }
  const auto lp = build_approx_lp(design, targets);
  const auto sol = solve_lp(lp.lp);
  const auto coef = coefficients(sol, lp.basis_size);

  MultilinearPoly w(n);
  for (std::size_t j = 0; j < monomials.size(); ++j) w.add_term(monomials[j], coef[j]);
  LpResult result;
  result.min_error = 1 - sol.objective;
  result.witness = std::move(w);
  result.pivots = sol.pivots;
  return result;
}

LpResult symmetric_lp_min_error(const SymmetricProfile& profile, int d) {
  const int n = profile.n;
  require_capability(n <= kMaxSymmetricLpVars, "symmetric_lp_min_error", n, kMaxSymmetricLpVars);
  if (d < 0 || d > n) throw ParameterError("symmetric_lp_min_error: degree budget must be in [0, n]");

  // Binomial basis C(k, j) keeps the design matrix integral and small.
  std::vector<std::vector<Rational>> design(static_cast<std::size_t>(n) + 1,
                                            std::vector<Rational>(static_cast<std::size_t>(d) + 1));
  std::vector<int> targets(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= d; ++j) {
      design[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          Rational(k >= j ? binomial(k, j) : BigInt(0));
    }
    targets[static_cast<std::size_t>(k)] = profile[k] ? 1 : 0;
  }
  const auto lp = build_approx_lp(design, targets);
  const auto sol = solve_lp(lp.lp);
  const auto coef = coefficients(sol, lp.basis_size);

  UnivariatePoly q;
  for (int j = 0; j <= d; ++j) q += UnivariatePoly::binomial(j).scaled(coef[static_cast<std::size_t>(j)]);
  LpResult result;
  result.min_error = 1 - sol.objective;
  result.witness = std::move(q);
  result.pivots = sol.pivots;
  return result;
}

int approx_degree(const TruthTable& f, const Rational& eps) {
  for (int d = 0; d <= f.n(); ++d) {
    if (lp_min_error(f, d).min_error <= eps) return d;
  }
  // Unreachable for eps >= 0: degree n interpolates exactly.
  return f.n();
}

int symmetric_approx_degree(const SymmetricProfile& profile, const Rational& eps) {
  for (int d = 0; d <= profile.n; ++d) {
    if (symmetric_lp_min_error(profile, d).min_error <= eps) return d;
  }
  return profile.n;
}

double markov_bound(const Rational& b1, const Rational& b2, const Rational& c, int n) {
  if (sgn(c) <= 0) throw DomainError("markov_bound needs c > 0");
  if (b2 < b1) throw DomainError("markov_bound needs b2 >= b1");
  const Rational ratio = c * n / (c + b2 - b1);
  return std::sqrt(ratio.get_d());
}

MultilinearPoly restrict_blocks(const MultilinearPoly& p, std::uint32_t x,
                                const std::vector<std::uint32_t>& blocks) {
  const int b = static_cast<int>(blocks.size());
  if (b > 31) throw CapabilityError("restrict_blocks supports at most 31 blocks");
  std::uint32_t seen = 0;
  std::vector<int> block_of(static_cast<std::size_t>(std::max(p.n(), 1)), -1);
  for (int i = 0; i < b; ++i) {
    const auto blk = blocks[static_cast<std::size_t>(i)];
    if (blk == 0) throw ParameterError("restrict_blocks: empty block");
    if (blk & seen) throw ParameterError("restrict_blocks: blocks overlap");
    if (p.n() < 32 && (blk >> p.n()) != 0) throw ParameterError("restrict_blocks: block index out of range");
    seen |= blk;
    for (int j = 0; j < p.n(); ++j) {
      if ((blk >> j) & 1u) block_of[static_cast<std::size_t>(j)] = i;
    }
  }

  const Rational one(1);
  MultilinearPoly q(b);
  for (const auto& [mask, c] : p.terms()) {
    MultilinearPoly term = MultilinearPoly::constant(b, c);
    for (int j = 0; j < p.n() && !term.is_zero(); ++j) {
      if (!((mask >> j) & 1u)) continue;
      const int i = block_of[static_cast<std::size_t>(j)];
      const bool xj = (x >> j) & 1u;
      if (i < 0) {
        if (!xj) term = MultilinearPoly(b);
        continue;
      }
      const std::uint32_t y = 1u << i;
      MultilinearPoly z = xj ? MultilinearPoly::constant(b, one) - MultilinearPoly::monomial(b, y, one)
                             : MultilinearPoly::monomial(b, y, one);
      term = term * z;
    }
    q += term;
  }
  return q;
}

bool represents(const MultilinearPoly& p, const TruthTable& f) {
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (p.evaluate(x) != Rational(f[x] ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace qquery
