#pragma once

#include <cstdint>
#include <optional>

#include "troprate/differentiators.hpp"
#include "troprate/matrix.hpp"

namespace troprate::oracle {

/// Log-domain grid. A candidate vector y = log x has its largest component
/// pinned at 0 and every other component on {0, -h, -2h, ...} down to -L.
struct GridSpec {
  double half_width = 3.0;  ///< L
  double step = 0.01;       ///< h
  /// Upper bound on ((L/h)+1)^(n-1), the points per pin choice.
  double max_points = 1e8;

  /// Throws PreconditionError for h <= 0, L < h or an oversized grid.
  void validate(std::size_t n) const;
};

struct GridResult {
  /// False when no grid point satisfied the (relaxed) constraints. This is
  /// a statement about the grid resolution, not a proof of infeasibility.
  bool found = false;
  /// Best objective value exp(f(y)).
  TropScalar value;
  /// Normalized argmin/argmax; empty when !found.
  TropMatrix witness;
  std::uint64_t points_visited = 0;
};

/// Brute-force minimum of x^- A x subject to B x <= x.
///
/// Minimizes f(y) = max_ij (log a_ij + y_j - y_i) over the grid with every
/// pin choice, accepting points with log b_ij + y_j - y_i <= h (slack for
/// rounding). If an exact optimum with log-range at most L exists, the
/// returned log value lies within 2h of it. A may have zero entries but needs a nonzero spectral radius.
GridResult grid_min_objective(const TropMatrix& a, const TropMatrix& b,
                              const GridSpec& grid);

enum class Sense { Max, Min };

/// Brute-force extremum of the Hilbert seminorm max_i y_i - min_j y_j over
/// feasible grid points (same slack and 2h guarantee).
GridResult grid_extremize_seminorm(const TropMatrix& b, const GridSpec& grid,
                                   Sense sense);

struct MembershipReport {
  /// x^- A x <= theta (within tol)
  bool objective_ok = false;
  /// B x <= x (within tol)
  bool constraints_ok = false;
  /// log(x^- A x) - log(theta)
  double objective_gap = 0.0;
  /// max_ij log(b_ij x_j / x_i); empty when B is the zero matrix.
  std::optional<double> worst_constraint_slack;

  bool ok() const { return objective_ok && constraints_ok; }
};

/// Checks that x lies in the solution set {x : x^- A x <= theta, Bx <= x}.
MembershipReport verify_membership(const RatingVector& x, const TropMatrix& a,
                                   const TropMatrix& b, TropScalar theta,
                                   double tol = kLogTol);

}  // namespace troprate::oracle
