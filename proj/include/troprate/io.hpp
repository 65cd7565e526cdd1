#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "troprate/errors.hpp"
#include "troprate/multicriteria.hpp"
#include "troprate/oracle.hpp"

namespace troprate::io {

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct CriterionEntry {
  std::string name;
  TropMatrix matrix;
};

/// In-memory form of a problem file.
///
///   {
///     "criteria": [ {"name": "cost", "matrix": [[1, "1/3"], [3, 1]]}, ... ],
///     "constraints": [[0, 1], [0, 0]],     // optional, zero matrix if absent
///     "order": [2, 1],                     // optional, one-based
///     "alternatives": ["A", "B"]           // optional labels
///   }
///
/// A criterion may give "file": "c1.csv" instead of "matrix", and
/// "constraints" may be a file name; CSV paths resolve against the
/// directory of the manifest.
struct ProblemDocument {
  std::vector<CriterionEntry> criteria;
  std::optional<TropMatrix> constraints;
  /// One-based criterion ranks, highest priority first.
  std::vector<std::size_t> order;
  std::vector<std::string> alternatives;

  std::size_t alternatives_count() const {
    return criteria.empty() ? 0 : criteria.front().matrix.rows();
  }
  ComparisonProblem to_problem(const SolveOptions& options = {}) const;
};

struct ParsedProblem {
  ProblemDocument document;
  ComparisonProblem problem;
  std::vector<ReciprocityWarning> warnings;
};

/// Matrix entry: a JSON number or a string holding a decimal or an exact
/// fraction "p/q". Fractions convert as log p - log q.
TropScalar parse_entry(const nlohmann::json& value);
TropScalar parse_entry(std::string_view text);

/// Comma/whitespace separated rows of entries.
TropMatrix parse_csv_matrix(std::istream& in);

ProblemDocument parse_problem_document(
    std::istream& in, const std::filesystem::path& base_dir = {});
ProblemDocument load_problem_document(const std::filesystem::path& path);

/// Parses and validates. Throws ParseError for malformed documents,
/// DimensionError / PreconditionError for invalid matrices and
/// InfeasibleError when Tr(B) > 1 ("infeasible constraints, Tr = ...").
ParsedProblem parse_problem(std::istream& in,
                            const std::filesystem::path& base_dir = {},
                            const SolveOptions& options = {});
ParsedProblem parse_problem(const std::filesystem::path& path,
                            const SolveOptions& options = {});

/// Inline JSON form of a document (matrices as numbers, full precision).
nlohmann::json to_json(const ProblemDocument& doc);

/// Row geometric means (prod_j c_ij)^(1/n), max-normalized. Ordinary
/// arithmetic; a comparison baseline only.
RatingVector geometric_mean_ratings(const TropMatrix& c);

/// Matches s against p/q * r^(1/k) with small integers; empty when none
/// fits within tol (log domain).
std::string exact_form(TropScalar s, double tol = kLogTol);

/// "6^(1/3) ≈ 1.8171", "8/3 ≈ 2.6667", "3", or a plain decimal.
std::string format_theta(TropScalar s);

/// Fixed four-decimal vector "(1.0000, 0.4444, ...)".
std::string format_vector(const std::vector<double>& x);

/// Combined vector with "lo…hi" where best and worst differ.
std::string format_interval(const std::vector<double>& best,
                            const std::vector<double>& worst);

struct VerificationSummary {
  bool best_ok = false;
  bool worst_ok = false;
  double worst_objective_gap = 0.0;
  std::optional<double> grid_step;
  std::optional<double> grid_theta;
  std::optional<double> grid_log_gap;
  bool grid_ok = true;
  std::string note;

  bool ok() const { return best_ok && worst_ok && grid_ok; }
};

/// Membership of every emitted vector in the final step's solution set
/// (A_s, B_{s-1}, theta_s) and, when `grid_step` is set and n <= 5, a grid
/// oracle cross-check of theta_s within 2h.
VerificationSummary verify_bundle(const SolutionBundle& bundle,
                                  std::optional<double> grid_step,
                                  double tol = kLogTol);

/// Box half-width that contains every optimal normalized vector:
/// max_ij log(theta / a_ji), padded by two steps.
double suggest_half_width(const TropMatrix& a, TropScalar theta, double step);

struct StepSummary {
  std::size_t step = 0;
  std::optional<std::size_t> criterion;  // one-based
  double theta = 0.0;
  std::string theta_exact;
  std::vector<std::size_t> aggregated;  // one-based
  std::vector<std::pair<std::size_t, double>> criterion_minima;
  std::vector<std::size_t> active;  // one-based
  std::vector<double> x_best;
  std::vector<double> x_worst;
  bool unique = false;
};

/// Machine-readable result of one method.
struct ResultDocument {
  std::string method;
  std::vector<StepSummary> steps;
  std::string stop;
  std::vector<double> x_best;  // empty when no minimal candidate exists
  std::vector<std::vector<double>> best_candidates;
  std::vector<double> x_worst;
  /// Per-component [min, max] of best and worst; empty when unique.
  std::vector<std::pair<double, double>> interval;
  bool unique = false;
  std::string ranking;
  std::string ranking_worst;
  bool robust = false;
  std::vector<std::string> alternatives;
  std::optional<VerificationSummary> verification;
};

ResultDocument make_result(const SolutionBundle& bundle,
                           const std::vector<std::string>& labels = {});

nlohmann::json to_json(const ResultDocument& doc);
ResultDocument result_from_json(const nlohmann::json& j);

enum class ReportFormat { Text, Json };

std::optional<ReportFormat> parse_format(std::string_view name);

/// Line-oriented text report: step table, best/worst vectors, interval
/// vector and ranking.
std::string emit_text(const ResultDocument& doc);

std::string emit_report(const ResultDocument& doc, ReportFormat format);

}  // namespace troprate::io
