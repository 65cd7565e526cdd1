#include "troprate/differentiators.hpp"

#include <algorithm>
#include <cmath>

#include "troprate/errors.hpp"

namespace troprate {

RatingVector::RatingVector(TropMatrix x) : x_(std::move(x)) {
  if (x_.cols() != 1 || x_.rows() == 0) {
    throw DimensionError("rating vector must be a nonempty column");
  }
  if (!x_.is_positive()) {
    throw PreconditionError("rating vector must have positive entries");
  }
}

RatingVector RatingVector::normalized(const TropMatrix& x) {
  RatingVector r(x);
  r.x_ = norm(r.x_).inverse() * r.x_;
  return r;
}

bool RatingVector::is_normalized() const {
  return !x_.empty() && norm(x_) == TropScalar::one();
}

bool approx_eq(const RatingVector& a, const RatingVector& b, double tol) {
  return approx_eq(a.column(), b.column(), tol);
}

const RatingVector& BestSolution::vector() const {
  if (!minimal) {
    throw PreconditionError("best differentiating solution is not unique");
  }
  return candidates[*minimal];
}

BestSolution best_solution(const GeneratorSet& g, double tol) {
  BestSolution best;
  std::vector<TropScalar> seminorms(g.count());
  for (std::size_t j = 0; j < g.count(); ++j) {
    seminorms[j] = hilbert_seminorm(g.column(j));
    best.seminorm += seminorms[j];
  }
  if (best.seminorm.is_zero()) {
    throw PreconditionError("generator has no positive column");
  }
  for (std::size_t j = 0; j < g.count(); ++j) {
    if (!approx_eq(seminorms[j], best.seminorm, tol)) continue;
    RatingVector x = RatingVector::normalized(g.column(j));
    const bool seen = std::any_of(
        best.candidates.begin(), best.candidates.end(),
        [&](const RatingVector& c) { return approx_eq(c, x, tol); });
    if (seen) continue;
    best.columns.push_back(j);
    best.candidates.push_back(std::move(x));
  }
  for (std::size_t c = 0; c < best.candidates.size() && !best.minimal; ++c) {
    bool below_all = true;
    for (std::size_t o = 0; o < best.candidates.size() && below_all; ++o) {
      below_all = approx_le(best.candidates[c].column(),
                            best.candidates[o].column(), tol);
    }
    if (below_all) best.minimal = c;
  }
  return best;
}

RatingVector worst_solution(const GeneratorSet& g) {
  if (!g.matrix.is_column_regular()) {
    throw PreconditionError("generator has an all-zero column");
  }
  const TropMatrix col_max = TropMatrix::ones(1, g.dimension()) * g.matrix;
  return RatingVector::normalized(conj_transpose(col_max));
}

bool is_unique(const GeneratorSet& g, double tol) {
  const TropMatrix& m = g.matrix;
  if (m.cols() < 2) return true;
  for (std::size_t j = 1; j < m.cols(); ++j) {
    std::optional<double> shift;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const TropScalar a = m(i, 0);
      const TropScalar b = m(i, j);
      if (a.is_zero() != b.is_zero()) return false;
      if (a.is_zero()) continue;
      const double d = b.log() - a.log();
      if (!shift) {
        shift = d;
      } else if (std::abs(d - *shift) > tol) {
        return false;
      }
    }
  }
  return true;
}

SeminormExtremum hilbert_max_generators(const TropMatrix& b, double tol) {
  if (!b.is_square() || b.empty()) {
    throw DimensionError("constraint matrix must be nonempty and square");
  }
  if (!b.is_positive()) {
    throw PreconditionError("seminorm maximization requires a constraint "
                            "matrix without zero entries");
  }
  const TropMatrix star = kleene_star(b, tol);
  const std::size_t n = star.rows();

  std::size_t k = 0;
  TropScalar best;
  for (std::size_t j = 0; j < n; ++j) {
    const TropScalar s = hilbert_seminorm(star.column_at(j));
    if (s > best) {
      best = s;
      k = j;
    }
  }
  std::size_t l = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (star(i, k) < star(l, k)) l = i;
  }
  TropMatrix single(n, n);
  single(l, k) = star(l, k);

  SeminormExtremum r;
  r.generator.matrix = star * conj_transpose(single) * star + star;
  r.value = norm(star * conj_transpose(star));
  return r;
}

SeminormExtremum hilbert_min_generators(const TropMatrix& b, double tol) {
  if (!b.is_square() || b.empty()) {
    throw DimensionError("constraint matrix must be nonempty and square");
  }
  const TropMatrix star = kleene_star(b, tol);
  const std::size_t n = star.rows();
  const TropScalar value = norm(star);
  const PowerCache powers(b, n - 1);
  const TropMatrix ones_col = TropMatrix::ones(n, 1);
  const TropMatrix ones_row = TropMatrix::ones(1, n);

  TropMatrix g = star;
  for (std::size_t i = 0; i < n; ++i) {
    const TropMatrix left = powers[i] * ones_col;
    for (std::size_t j = 0; i + j <= n - 1; ++j) {
      g = g + value.inverse() * (left * (ones_row * powers[j]));
    }
  }
  return SeminormExtremum{GeneratorSet{std::move(g)}, value};
}

}  // namespace troprate
