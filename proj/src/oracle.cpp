#include "troprate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "troprate/errors.hpp"

namespace troprate::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Guards interval and constraint tests against rounding of -k*h.
constexpr double kEdge = 1e-12;

enum class Goal { MinObjective, MinRange, MaxRange };

// Log weights of a matrix; absent entries (zeros) are flagged.
struct LogWeights {
  std::size_t n = 0;
  std::vector<double> w;
  std::vector<char> present;

  explicit LogWeights(const TropMatrix& m)
      : n(m.rows()), w(m.size(), 0.0), present(m.size(), 0) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].is_positive()) {
        w[k] = m[k].log();
        present[k] = 1;
      }
    }
  }
  bool has(std::size_t i, std::size_t j) const { return present[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return w[i * n + j]; }
};

class PinnedSearch {
 public:
  PinnedSearch(Goal goal, const LogWeights* a, const LogWeights& b,
               const GridSpec& grid)
      : goal_(goal),
        a_(a),
        b_(b),
        n_(b.n),
        h_(grid.step),
        slack_(grid.step),
        last_index_(static_cast<long>(std::floor(grid.half_width / grid.step +
                                                 1e-9))) {}

  void run(std::size_t pin) {
    y_.assign(n_, 0.0);
    fixed_.assign(n_, 0);
    order_.clear();
    for (std::size_t c = 0; c < n_; ++c) {
      if (c != pin) order_.push_back(c);
    }
    fixed_[pin] = 1;
    if (b_.has(pin, pin) && b_.at(pin, pin) > slack_ + kEdge) return;
    double start = 0.0;
    if (goal_ == Goal::MinObjective) start = diagonal(pin);
    descend(0, start);
  }

  bool found() const { return found_; }
  double best() const { return best_; }
  const std::vector<double>& best_y() const { return best_y_; }
  std::uint64_t visited() const { return visited_; }

 private:
  double diagonal(std::size_t c) const {
    return a_->has(c, c) ? a_->at(c, c) : -kInf;
  }

  bool improves(double v) const {
    if (!found_) return true;
    return goal_ == Goal::MaxRange ? v > best_ : v < best_;
  }

  void descend(std::size_t depth, double partial) {
    if (depth == order_.size()) {
      ++visited_;
      if (improves(partial)) {
        found_ = true;
        best_ = partial;
        best_y_ = y_;
      }
      return;
    }
    const std::size_t c = order_[depth];
    if (b_.has(c, c) && b_.at(c, c) > slack_ + kEdge) return;
    if (goal_ == Goal::MinObjective && found_ && diagonal(c) >= best_) return;

    // Superset of admissible y_c from constraints (and pruning bound).
    double lo = -kInf;
    double hi = kInf;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!fixed_[i]) continue;
      if (b_.has(i, c)) hi = std::min(hi, y_[i] + slack_ - b_.at(i, c));
      if (b_.has(c, i)) lo = std::max(lo, y_[i] + b_.at(c, i) - slack_);
      if (goal_ == Goal::MinObjective && found_) {
        if (a_->has(i, c)) hi = std::min(hi, y_[i] + best_ - a_->at(i, c));
        if (a_->has(c, i)) lo = std::max(lo, y_[i] + a_->at(c, i) - best_);
      }
    }
    if (goal_ == Goal::MinRange && found_) lo = std::max(lo, -best_);

    long k_first = 0;
    long k_last = last_index_;
    if (hi < kInf) {
      k_first = std::max(k_first, static_cast<long>(std::ceil(-hi / h_ - 1e-9)));
    }
    if (lo > -kInf) {
      k_last = std::min(k_last, static_cast<long>(std::floor(-lo / h_ + 1e-9)));
    }

    fixed_[c] = 1;
    for (long k = k_first; k <= k_last; ++k) {
      const double yc = -static_cast<double>(k) * h_;
      y_[c] = yc;
      bool ok = true;
      double value = partial;
      for (std::size_t i = 0; i < n_ && ok; ++i) {
        if (!fixed_[i] || i == c) continue;
        if (b_.has(i, c) && b_.at(i, c) + yc - y_[i] > slack_ + kEdge) ok = false;
        if (b_.has(c, i) && b_.at(c, i) + y_[i] - yc > slack_ + kEdge) ok = false;
        if (goal_ == Goal::MinObjective) {
          if (a_->has(i, c)) value = std::max(value, a_->at(i, c) + yc - y_[i]);
          if (a_->has(c, i)) value = std::max(value, a_->at(c, i) + y_[i] - yc);
        }
      }
      if (!ok) continue;
      if (goal_ == Goal::MinObjective) {
        value = std::max(value, diagonal(c));
      } else {
        value = std::max(value, -yc);
      }
      if (goal_ != Goal::MaxRange && found_ && value >= best_) continue;
      descend(depth + 1, value);
    }
    fixed_[c] = 0;
  }

  Goal goal_;
  const LogWeights* a_;
  const LogWeights& b_;
  std::size_t n_;
  double h_;
  double slack_;
  long last_index_;

  std::vector<double> y_;
  std::vector<char> fixed_;
  std::vector<std::size_t> order_;
  bool found_ = false;
  double best_ = 0.0;
  std::vector<double> best_y_;
  std::uint64_t visited_ = 0;
};

GridResult search(Goal goal, const TropMatrix* a, const TropMatrix& b,
                  const GridSpec& grid) {
  if (!b.is_square() || b.empty()) {
    throw DimensionError("grid oracle: constraint matrix must be square");
  }
  const std::size_t n = b.rows();
  grid.validate(n);
  std::optional<LogWeights> aw;
  if (a) {
    if (a->rows() != n || a->cols() != n) {
      throw DimensionError("grid oracle: objective and constraint shapes "
                           "differ");
    }
    if (spectral_radius(*a).is_zero()) {
      throw PreconditionError("grid oracle: objective matrix has zero "
                              "spectral radius");
    }
    aw.emplace(*a);
  }
  const LogWeights bw(b);

  GridResult result;
  double best = 0.0;
  std::vector<double> best_y;
  for (std::size_t pin = 0; pin < n; ++pin) {
    PinnedSearch s(goal, aw ? &*aw : nullptr, bw, grid);
    s.run(pin);
    result.points_visited += s.visited();
    if (!s.found()) continue;
    const bool better = !result.found ||
                        (goal == Goal::MaxRange ? s.best() > best
                                                : s.best() < best);
    if (better) {
      result.found = true;
      best = s.best();
      best_y = s.best_y();
    }
  }
  if (result.found) {
    result.value = TropScalar::from_log(best);
    result.witness = TropMatrix(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      result.witness[i] = TropScalar::from_log(best_y[i]);
    }
  }
  return result;
}

}  // namespace

void GridSpec::validate(std::size_t n) const {
  if (!(step > 0.0)) throw PreconditionError("grid step must be positive");
  if (!(half_width >= step)) {
    throw PreconditionError("grid half-width must be at least one step");
  }
  const double per_axis = std::floor(half_width / step + 1e-9) + 1.0;
  const double points =
      std::pow(per_axis, static_cast<double>(n > 0 ? n - 1 : 0));
  if (points > max_points) {
    std::ostringstream msg;
    msg << "grid of " << points << " points exceeds the cap of "
        << max_points;
    throw PreconditionError(msg.str());
  }
}

GridResult grid_min_objective(const TropMatrix& a, const TropMatrix& b,
                              const GridSpec& grid) {
  return search(Goal::MinObjective, &a, b, grid);
}

GridResult grid_extremize_seminorm(const TropMatrix& b, const GridSpec& grid,
                                   Sense sense) {
  return search(sense == Sense::Max ? Goal::MaxRange : Goal::MinRange,
                nullptr, b, grid);
}

MembershipReport verify_membership(const RatingVector& x, const TropMatrix& a,
                                   const TropMatrix& b, TropScalar theta,
                                   double tol) {
  const std::size_t n = x.size();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw DimensionError("membership check: shapes do not match the vector");
  }
  MembershipReport r;
  const TropScalar objective = (conj_transpose(x.column()) * a * x.column())[0];
  if (objective.is_zero() || theta.is_zero()) {
    r.objective_ok = objective.is_zero();
    r.objective_gap = objective.is_zero() ? -kInf : kInf;
  } else {
    r.objective_gap = objective.log() - theta.log();
    r.objective_ok = r.objective_gap <= tol;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j).is_zero()) continue;
      const double s = b(i, j).log() + x[j].log() - x[i].log();
      r.worst_constraint_slack =
          std::max(r.worst_constraint_slack.value_or(-kInf), s);
    }
  }
  r.constraints_ok = !r.worst_constraint_slack || *r.worst_constraint_slack <= tol;
  return r;
}

}  // namespace troprate::oracle
