#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "troprate/differentiators.hpp"
#include "troprate/matrix.hpp"
#include "troprate/quadratic.hpp"

namespace troprate {

struct SolveOptions {
  /// Log-domain tolerance for feasibility, ties and collinearity.
  double tol = kLogTol;
  ThetaEngine engine = ThetaEngine::Auto;
};

/// A pair (i, j) with |log(c_ij c_ji)| above the reciprocity threshold.
struct ReciprocityWarning {
  std::size_t criterion;
  std::size_t row;
  std::size_t col;
  double log_deviation;
};

inline constexpr double kReciprocityTol = 1e-6;

/// m pairwise comparison matrices over n alternatives, a constraint matrix
/// and the criterion sequence used by the lexicographic methods.
struct ComparisonProblem {
  std::vector<TropMatrix> criteria;
  TropMatrix constraints;
  /// Zero-based criterion indices, highest priority first. Empty means the
  /// input order.
  std::vector<std::size_t> lex_order;
  SolveOptions options;

  std::size_t alternatives() const {
    return criteria.empty() ? 0 : criteria.front().rows();
  }
  std::size_t criterion_count() const { return criteria.size(); }

  /// lex_order, or 0..m-1 when unset.
  std::vector<std::size_t> effective_order() const;

  /// Checks shapes, positivity, nonzero spectral radii and the lex order.
  /// Throws DimensionError / PreconditionError. Feasibility of the
  /// constraints is left to the solvers.
  void validate() const;

  /// Reciprocity deviations; reported, never enforced.
  std::vector<ReciprocityWarning> reciprocity_warnings(
      double threshold = kReciprocityTol) const;
};

enum class Method { MaxOrdering, Lexicographic, LexMaxOrdering };

std::string_view to_string(Method m);
std::string_view long_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct StepRecord {
  /// One-based step number.
  std::size_t step = 0;
  /// Criterion minimized at this step (lexicographic only, zero-based).
  std::optional<std::size_t> criterion;
  /// A_s
  TropMatrix objective;
  /// B_{s-1}
  TropMatrix previous_constraints;
  TropScalar theta;
  /// B_s = theta_s^-1 A_s + B_{s-1}
  TropMatrix merged;
  /// B_s*
  GeneratorSet generator;
  /// I_{s-1}: criteria aggregated into A_s (lex max-ordering only).
  std::vector<std::size_t> aggregated;
  /// theta_sl for l in I_{s-1} (lex max-ordering only).
  std::vector<std::pair<std::size_t, TropScalar>> criterion_minima;
  /// I_s (lex max-ordering only).
  std::vector<std::size_t> active;
  BestSolution best;
  RatingVector worst;
  bool unique = false;
};

/// Alternatives grouped into tie classes, best class first.
using TieClasses = std::vector<std::vector<std::size_t>>;

struct Ranking {
  TieClasses by_best;
  TieClasses by_worst;
  /// No pair of alternatives is strictly ordered one way by a best
  /// candidate and the other way by the worst vector.
  bool robust = false;

  const TieClasses& order() const { return by_best; }
};

enum class StopReason { Completed, Unique, NoActiveCriteria };

std::string_view to_string(StopReason r);

struct SolutionBundle {
  Method method = Method::MaxOrdering;
  std::vector<StepRecord> steps;
  StopReason stop = StopReason::Completed;
  GeneratorSet generator;
  BestSolution best;
  RatingVector worst;
  bool unique = false;
  Ranking ranking;

  const StepRecord& final_step() const { return steps.back(); }
};

/// Minimize the worst criterion: A = C_1 + ... + C_m.
SolutionBundle max_ordering(const ComparisonProblem& p);

/// Minimize criteria one after another in lex order, stopping early once
/// the solution is unique.
SolutionBundle lex_ordering(const ComparisonProblem& p);

/// Iterated max-ordering over the criteria that can still improve.
SolutionBundle lex_max_ordering(const ComparisonProblem& p);

SolutionBundle solve(const ComparisonProblem& p, Method method);

/// Tie classes by descending rating; entries within `tol` of the leading
/// entry of a class join it.
TieClasses rank_by(const RatingVector& x, double tol = kLogTol);

Ranking rank_alternatives(const SolutionBundle& bundle,
                          double tol = kLogTol);

/// "(1) ≻ (2) ≻ (3) ≡ (4)", or with labels in place of one-based indices.
std::string format_ranking(const TieClasses& classes,
                           const std::vector<std::string>& labels = {});

}  // namespace troprate
