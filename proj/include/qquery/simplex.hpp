#pragma once

#include <vector>

#include "qquery/rational.hpp"

namespace qquery {

/// maximize c.x  subject to  A x <= b,  x >= 0, with b >= 0 so the origin is
/// a feasible starting vertex.
struct CanonicalLp {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  Rational objective;
  std::vector<Rational> x;
  int pivots = 0;
};

/// Dense tableau simplex over exact rationals with Bland's rule (smallest
/// eligible entering index, ties in the ratio test broken by smallest basic
/// variable index), so it terminates without cycling.
///
/// Throws ParameterError on shape mismatch or a negative right-hand side and
/// DomainError if the problem is unbounded.
LpSolution solve_lp(const CanonicalLp& lp);

}  // namespace qquery
