#include "troprate/multicriteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "troprate/errors.hpp"

namespace troprate {

namespace {

TropMatrix aggregate(const ComparisonProblem& p,
                     const std::vector<std::size_t>& subset) {
  TropMatrix a = p.criteria[subset.front()];
  for (std::size_t k = 1; k < subset.size(); ++k) a = a + p.criteria[subset[k]];
  return a;
}

ThetaOptions theta_options(const ComparisonProblem& p) {
  return ThetaOptions{p.options.engine, p.options.tol};
}

// Fills theta, merged, generator, best/worst and the uniqueness flag.
void solve_step(StepRecord& rec, const TropMatrix& objective,
                const TropMatrix& previous, const ComparisonProblem& p) {
  ThetaResult r = solve_quadratic(objective, previous, theta_options(p));
  rec.objective = objective;
  rec.previous_constraints = previous;
  rec.theta = r.theta;
  rec.merged = std::move(r.merged);
  rec.generator = std::move(r.generator);
  rec.best = best_solution(rec.generator, p.options.tol);
  rec.worst = worst_solution(rec.generator);
  // Differing best and worst vectors already rule out uniqueness.
  const bool same = rec.best.minimal &&
                    approx_eq(rec.best.vector(), rec.worst, p.options.tol);
  rec.unique = same && is_unique(rec.generator, p.options.tol);
}

SolutionBundle finish(Method method, std::vector<StepRecord> steps,
                      StopReason stop, double tol) {
  SolutionBundle b;
  b.method = method;
  b.steps = std::move(steps);
  b.stop = stop;
  const StepRecord& last = b.steps.back();
  b.generator = last.generator;
  b.best = last.best;
  b.worst = last.worst;
  b.unique = last.unique;
  b.ranking = rank_alternatives(b, tol);
  return b;
}

}  // namespace

std::vector<std::size_t> ComparisonProblem::effective_order() const {
  if (!lex_order.empty()) return lex_order;
  std::vector<std::size_t> order(criteria.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

void ComparisonProblem::validate() const {
  if (criteria.empty()) {
    throw PreconditionError("at least one criterion matrix is required");
  }
  const std::size_t n = criteria.front().rows();
  if (n == 0) throw DimensionError("criterion matrices must be nonempty");
  for (std::size_t l = 0; l < criteria.size(); ++l) {
    const TropMatrix& c = criteria[l];
    if (c.rows() != n || c.cols() != n) {
      std::ostringstream msg;
      msg << "criterion " << l + 1 << " is " << c.rows() << "x" << c.cols()
          << ", expected " << n << "x" << n;
      throw DimensionError(msg.str());
    }
    if (!c.is_positive()) {
      std::ostringstream msg;
      msg << "criterion " << l + 1 << " has a nonpositive entry";
      throw PreconditionError(msg.str());
    }
  }
  if (constraints.rows() != n || constraints.cols() != n) {
    throw DimensionError("constraint matrix must be n x n");
  }
  if (!lex_order.empty()) {
    std::vector<std::size_t> sorted = lex_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted.size() != criteria.size() || sorted[k] != k) {
        throw PreconditionError("criterion order must be a permutation of "
                                "1..m");
      }
    }
  }
}

std::vector<ReciprocityWarning> ComparisonProblem::reciprocity_warnings(
    double threshold) const {
  std::vector<ReciprocityWarning> out;
  for (std::size_t l = 0; l < criteria.size(); ++l) {
    const TropMatrix& c = criteria[l];
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = i; j < c.cols(); ++j) {
        if (c(i, j).is_zero() || c(j, i).is_zero()) continue;
        const double dev = c(i, j).log() + c(j, i).log();
        if (std::abs(dev) > threshold) out.push_back({l, i, j, dev});
      }
    }
  }
  return out;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::MaxOrdering: return "max";
    case Method::Lexicographic: return "lex";
    case Method::LexMaxOrdering: return "lexmax";
  }
  return "max";
}

std::string_view long_name(Method m) {
  switch (m) {
    case Method::MaxOrdering: return "max-ordering";
    case Method::Lexicographic: return "lexicographic ordering";
    case Method::LexMaxOrdering: return "lexicographic max-ordering";
  }
  return "max-ordering";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "max") return Method::MaxOrdering;
  if (name == "lex") return Method::Lexicographic;
  if (name == "lexmax") return Method::LexMaxOrdering;
  return std::nullopt;
}

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::Completed: return "completed";
    case StopReason::Unique: return "unique";
    case StopReason::NoActiveCriteria: return "no-active-criteria";
  }
  return "completed";
}

SolutionBundle max_ordering(const ComparisonProblem& p) {
  p.validate();
  StepRecord rec;
  rec.step = 1;
  rec.aggregated = p.effective_order();
  std::sort(rec.aggregated.begin(), rec.aggregated.end());
  solve_step(rec, aggregate(p, rec.aggregated), p.constraints, p);
  std::vector<StepRecord> steps;
  steps.push_back(std::move(rec));
  return finish(Method::MaxOrdering, std::move(steps), StopReason::Completed,
                p.options.tol);
}

SolutionBundle lex_ordering(const ComparisonProblem& p) {
  p.validate();
  std::vector<StepRecord> steps;
  TropMatrix previous = p.constraints;
  StopReason stop = StopReason::Completed;
  for (std::size_t criterion : p.effective_order()) {
    StepRecord rec;
    rec.step = steps.size() + 1;
    rec.criterion = criterion;
    solve_step(rec, p.criteria[criterion], previous, p);
    previous = rec.merged;
    const bool unique = rec.unique;
    steps.push_back(std::move(rec));
    if (unique) {
      stop = StopReason::Unique;
      break;
    }
  }
  return finish(Method::Lexicographic, std::move(steps), stop, p.options.tol);
}

SolutionBundle lex_max_ordering(const ComparisonProblem& p) {
  p.validate();
  std::vector<StepRecord> steps;
  std::vector<std::size_t> active = p.effective_order();
  std::sort(active.begin(), active.end());
  TropMatrix previous = p.constraints;
  StopReason stop = StopReason::Completed;
  const ThetaOptions opts = theta_options(p);

  for (std::size_t s = 1; s <= p.criterion_count(); ++s) {
    StepRecord rec;
    rec.step = s;
    rec.aggregated = active;
    solve_step(rec, aggregate(p, active), previous, p);

    std::vector<std::size_t> next;
    for (std::size_t l : active) {
      const TropScalar t = min_theta(p.criteria[l], rec.merged, opts);
      rec.criterion_minima.emplace_back(l, t);
      // Strict improvement, beyond rounding noise.
      if (t.log() < rec.theta.log() - p.options.tol) next.push_back(l);
    }
    rec.active = next;
    previous = rec.merged;
    const bool unique = rec.unique;
    steps.push_back(std::move(rec));

    if (unique) {
      stop = StopReason::Unique;
      break;
    }
    if (next.empty()) {
      stop = StopReason::NoActiveCriteria;
      break;
    }
    active = std::move(next);
  }
  return finish(Method::LexMaxOrdering, std::move(steps), stop,
                p.options.tol);
}

SolutionBundle solve(const ComparisonProblem& p, Method method) {
  switch (method) {
    case Method::MaxOrdering: return max_ordering(p);
    case Method::Lexicographic: return lex_ordering(p);
    case Method::LexMaxOrdering: return lex_max_ordering(p);
  }
  return max_ordering(p);
}

TieClasses rank_by(const RatingVector& x, double tol) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a].log() > x[b].log();
  });
  TieClasses classes;
  double leader = 0.0;
  for (std::size_t i : idx) {
    if (classes.empty() || leader - x[i].log() > tol) {
      classes.push_back({i});
      leader = x[i].log();
    } else {
      classes.back().push_back(i);
    }
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

namespace {

// True when no pair (i, j) is strictly ordered one way by x and the other
// way by y. Ties on either side are compatible with anything.
bool compatible(const RatingVector& x, const RatingVector& y, double tol) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double dx = x[i].log() - x[j].log();
      const double dy = y[i].log() - y[j].log();
      if (dx > tol && dy < -tol) return false;
    }
  }
  return true;
}

}  // namespace

Ranking rank_alternatives(const SolutionBundle& bundle, double tol) {
  Ranking r;
  r.by_worst = rank_by(bundle.worst, tol);
  const auto& cands = bundle.best.candidates;
  const std::size_t lead = bundle.best.minimal.value_or(0);
  r.by_best = rank_by(cands[lead], tol);
  r.robust = std::all_of(cands.begin(), cands.end(), [&](const auto& c) {
    return compatible(c, bundle.worst, tol);
  });
  return r;
}

std::string format_ranking(const TieClasses& classes,
                           const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c) os << " ≻ ";
    for (std::size_t k = 0; k < classes[c].size(); ++k) {
      if (k) os << " ≡ ";
      const std::size_t i = classes[c][k];
      if (i < labels.size()) {
        os << labels[i];
      } else {
        os << "(" << i + 1 << ")";
      }
    }
  }
  return os.str();
}

}  // namespace troprate
