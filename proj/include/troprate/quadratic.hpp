#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "troprate/inequality.hpp"
#include "troprate/matrix.hpp"

namespace troprate {

/// How the optimal value of min x^- A x s.t. B x <= x is evaluated.
enum class ThetaEngine {
  Auto,       ///< Enumerate for n <= kEnumerateAutoLimit, bisect above.
  Enumerate,  ///< Closed-form trace formula over all factor sequences.
  Bisect,     ///< Least t with Tr(t^-1 A + B) <= 1, by bisection on log t.
};

inline constexpr std::size_t kEnumerateAutoLimit = 12;
inline constexpr std::size_t kEnumerateMaxDimension = 16;

std::string_view to_string(ThetaEngine engine);
std::optional<ThetaEngine> parse_engine(std::string_view name);

struct ThetaOptions {
  ThetaEngine engine = ThetaEngine::Auto;
  /// Feasibility slack for Tr(B) <= 1, in log units.
  double tol = kLogTol;
};

/// Optimum and solution generator of min x^- A x subject to B x <= x.
struct ThetaResult {
  TropScalar theta;
  /// theta^-1 A + B
  TropMatrix merged;
  /// (theta^-1 A + B)*
  GeneratorSet generator;
};

/// Minimum of x^- A x over regular x with B x <= x.
///
/// Throws DimensionError on shape mismatch, PreconditionError when
/// spectral_radius(A) is zero (or n exceeds the enumeration limit with the
/// Enumerate engine), InfeasibleError when Tr(B) > 1.
TropScalar min_theta(const TropMatrix& a, const TropMatrix& b,
                     const ThetaOptions& options = {});

/// Maximum over k = 1..n and i_1 + ... + i_k <= n - k of
/// tr(A B^i_1 ... A B^i_k)^(1/k), by depth-first enumeration with running
/// prefix products.
TropScalar min_theta_enumerate(const TropMatrix& a, const TropMatrix& b,
                               double tol = kLogTol);

/// Least t > 0 with Tr(t^-1 A + B) <= 1, located to 1e-12 in log t.
TropScalar min_theta_bisect(const TropMatrix& a, const TropMatrix& b,
                            double tol = kLogTol);

/// theta, B_1 = theta^-1 A + B and G = B_1*.
ThetaResult solve_quadratic(const TropMatrix& a, const TropMatrix& b,
                            const ThetaOptions& options = {});

}  // namespace troprate
