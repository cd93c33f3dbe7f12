#include "qquery/simplex.hpp"

#include <cstddef>

#include "qquery/errors.hpp"

namespace qquery {

LpSolution solve_lp(const CanonicalLp& lp) {
  const std::size_t rows = lp.b.size();
  const std::size_t vars = lp.c.size();
  if (lp.a.size() != rows) throw ParameterError("LP: row count mismatch");
  for (const auto& row : lp.a) {
    if (row.size() != vars) throw ParameterError("LP: column count mismatch");
  }
  for (const auto& rhs : lp.b) {
    if (sgn(rhs) < 0) throw ParameterError("LP: right-hand side must be non-negative");
  }

  // Columns: structural 0..vars-1, slack vars..vars+rows-1, then the rhs.
  const std::size_t cols = vars + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < vars; ++j) t[r][j] = lp.a[r][j];
    t[r][vars + r] = 1;
    t[r][cols] = lp.b[r];
  }
  // Reduced costs for maximisation: entering candidates have cost > 0.
  std::vector<Rational> cost(cols + 1);
  for (std::size_t j = 0; j < vars; ++j) cost[j] = lp.c[j];
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = vars + r;

  LpSolution sol;
  Rational ratio;
  Rational best_ratio;
  Rational factor;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(cost[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(t[r][enter]) <= 0) continue;
      ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) throw DomainError("LP is unbounded");

    auto& prow = t[leave];
    const Rational pivot = prow[enter];
    for (std::size_t j = 0; j <= cols; ++j) {
      if (sgn(prow[j]) != 0) prow[j] /= pivot;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || sgn(t[r][enter]) == 0) continue;
      factor = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(prow[j]) != 0) t[r][j] -= factor * prow[j];
      }
    }
    if (sgn(cost[enter]) != 0) {
      factor = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(prow[j]) != 0) cost[j] -= factor * prow[j];
      }
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.x.assign(vars, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) sol.x[basis[r]] = t[r][cols];
  }
  sol.objective = 0;
  for (std::size_t j = 0; j < vars; ++j) sol.objective += lp.c[j] * sol.x[j];
  return sol;
}

}  // namespace qquery
