#include "troprate/quadratic.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "troprate/errors.hpp"

namespace troprate {

namespace {

constexpr double kBisectWidth = 1e-12;

void validate(const TropMatrix& a, const TropMatrix& b, double tol) {
  if (a.empty() || !a.is_square()) {
    throw DimensionError("objective matrix must be nonempty and square");
  }
  if (b.rows() != a.rows() || b.cols() != a.cols()) {
    throw DimensionError("constraint matrix must match the objective shape");
  }
  if (spectral_radius(a).is_zero()) {
    throw PreconditionError("objective matrix has zero spectral radius");
  }
  const TropScalar tr = trace_fn(b);
  if (tr.is_positive() && tr.log() > tol) {
    std::ostringstream msg;
    msg << "infeasible constraints, Tr = " << tr.value();
    throw InfeasibleError(msg.str(), tr.log());
  }
}

struct SequenceSearch {
  std::size_t n;
  std::vector<TropMatrix> a_times_b_pow;  // A B^i, i = 0..n-1
  TropScalar best;

  // prefix = A B^i_1 ... A B^i_k with k factors of A and `used` = k + sum(i).
  void extend(const TropMatrix& prefix, std::size_t k, std::size_t used) {
    for (std::size_t i = 0; used + 1 + i <= n; ++i) {
      TropMatrix next = prefix * a_times_b_pow[i];
      best += trace(next).root(static_cast<int>(k + 1));
      if (used + 1 + i < n) extend(next, k + 1, used + 1 + i);
    }
  }
};

}  // namespace

std::string_view to_string(ThetaEngine engine) {
  switch (engine) {
    case ThetaEngine::Auto: return "auto";
    case ThetaEngine::Enumerate: return "enumerate";
    case ThetaEngine::Bisect: return "bisect";
  }
  return "auto";
}

std::optional<ThetaEngine> parse_engine(std::string_view name) {
  if (name == "auto") return ThetaEngine::Auto;
  if (name == "enumerate") return ThetaEngine::Enumerate;
  if (name == "bisect") return ThetaEngine::Bisect;
  return std::nullopt;
}

TropScalar min_theta_enumerate(const TropMatrix& a, const TropMatrix& b,
                               double tol) {
  validate(a, b, tol);
  const std::size_t n = a.rows();
  if (n > kEnumerateMaxDimension) {
    throw PreconditionError("sequence enumeration is limited to n <= 16; use "
                            "the bisection engine");
  }
  const PowerCache b_powers(b, n - 1);
  SequenceSearch search{n, {}, TropScalar()};
  search.a_times_b_pow.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    search.a_times_b_pow.push_back(a * b_powers[i]);
  }
  search.extend(TropMatrix::identity(n), 0, 0);
  return search.best;
}

TropScalar min_theta_bisect(const TropMatrix& a, const TropMatrix& b,
                            double tol) {
  validate(a, b, tol);
  const std::size_t n = a.rows();

  // Tr(B) may sit a rounding error above one; measure against that level.
  const TropScalar tr_b = trace_fn(b);
  const double level = std::max(tr_b.is_zero() ? 0.0 : tr_b.log(), 0.0) +
                       kBisectWidth;
  auto feasible = [&](double log_t) {
    const TropScalar tr =
        trace_fn(TropScalar::from_log(-log_t) * a + b);
    return tr.is_zero() || tr.log() <= level;
  };

  // theta >= lambda(A); any cycle carries at most n - 1 arcs of B.
  double lo = spectral_radius(a).log() - 1.0;
  const double max_a = norm(a).log();
  const TropScalar nb = norm(b);
  const double max_b = nb.is_zero() ? 0.0 : std::max(nb.log(), 0.0);
  double hi = max_a + static_cast<double>(n) * max_b + 1.0;
  while (!feasible(hi)) hi += 1.0 + (hi - lo);
  while (feasible(lo)) lo -= 1.0 + (hi - lo);

  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? hi : lo) = mid;
  }
  return TropScalar::from_log(hi);
}

TropScalar min_theta(const TropMatrix& a, const TropMatrix& b,
                     const ThetaOptions& options) {
  ThetaEngine engine = options.engine;
  if (engine == ThetaEngine::Auto) {
    engine = a.rows() <= kEnumerateAutoLimit ? ThetaEngine::Enumerate
                                             : ThetaEngine::Bisect;
  }
  return engine == ThetaEngine::Enumerate
             ? min_theta_enumerate(a, b, options.tol)
             : min_theta_bisect(a, b, options.tol);
}

ThetaResult solve_quadratic(const TropMatrix& a, const TropMatrix& b,
                            const ThetaOptions& options) {
  ThetaResult r;
  r.theta = min_theta(a, b, options);
  r.merged = r.theta.inverse() * a + b;
  r.generator = solve_closure(r.merged, options.tol);
  return r;
}

}  // namespace troprate
