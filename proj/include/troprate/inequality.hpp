#pragma once

#include "troprate/matrix.hpp"

namespace troprate {

/// Generator of a solution family { G u : u != 0 }.
struct GeneratorSet {
  TropMatrix matrix;

  std::size_t dimension() const { return matrix.rows(); }
  std::size_t count() const { return matrix.cols(); }
  TropMatrix column(std::size_t j) const { return matrix.column_at(j); }
  /// G u for a parameter column u.
  TropMatrix apply(const TropMatrix& u) const { return matrix * u; }
};

/// Maximal solution (d^- A)^- of A x <= d. Every x <= result solves the
/// inequality and every solution is below it.
/// Throws PreconditionError unless A is column-regular and d is positive.
TropMatrix solve_upper_bound(const TropMatrix& a, const TropMatrix& d);

/// All regular solutions of B x <= x, given as x = B* u.
/// Throws InfeasibleError (with the Tr value) when Tr(B) > 1.
GeneratorSet solve_closure(const TropMatrix& b, double tol = kLogTol);

}  // namespace troprate
