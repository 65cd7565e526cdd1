#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "troprate/inequality.hpp"
#include "troprate/matrix.hpp"

namespace troprate {

/// Positive vector of absolute ratings of n alternatives.
class RatingVector {
 public:
  RatingVector() = default;
  /// Throws PreconditionError unless `x` is a positive column.
  explicit RatingVector(TropMatrix x);

  /// x / ||x||, so that the largest rating is exactly one.
  static RatingVector normalized(const TropMatrix& x);

  const TropMatrix& column() const { return x_; }
  std::size_t size() const { return x_.rows(); }
  TropScalar operator[](std::size_t i) const { return x_[i]; }
  std::vector<double> values() const { return x_.values(); }

  /// max entry == 1 (exactly, in the log domain).
  bool is_normalized() const;
  /// ||x|| ||x^-||, the ratio of the largest to the smallest rating.
  TropScalar seminorm() const { return hilbert_seminorm(x_); }

 private:
  TropMatrix x_;
};

bool approx_eq(const RatingVector& a, const RatingVector& b,
               double tol = kLogTol);

/// Normalized columns of a generator that maximize the Hilbert seminorm.
struct BestSolution {
  /// Column indices of G attaining the maximum, one per distinct
  /// normalized vector.
  std::vector<std::size_t> columns;
  /// g_k / ||g_k|| for each index in `columns`; pairwise distinct.
  std::vector<RatingVector> candidates;
  /// Index into `candidates` of the element dominated by all others, if any.
  std::optional<std::size_t> minimal;
  /// The maximal seminorm value.
  TropScalar seminorm;

  /// The unique minimal candidate. Throws when there is none.
  const RatingVector& vector() const;
};

/// Best (most differentiating) normalized solutions from the columns of G.
/// Columns with zero entries are not candidates.
/// Throws PreconditionError when G has no positive column.
BestSolution best_solution(const GeneratorSet& g, double tol = kLogTol);

/// Worst (least differentiating) normalized solution (1^T G)^-: the
/// reciprocal column maxima of G. For a Kleene star this is the maximal
/// normalized solution of B x <= x and its seminorm equals ||G||.
/// Throws PreconditionError when G has an all-zero column.
RatingVector worst_solution(const GeneratorSet& g);

/// True iff all columns of G are pairwise collinear (equal up to a positive
/// factor, with identical zero patterns).
bool is_unique(const GeneratorSet& g, double tol = kLogTol);

/// Generators of all regular maximizers of ||x|| ||x^-|| subject to Bx <= x.
struct SeminormExtremum {
  GeneratorSet generator;
  TropScalar value;
};

/// Maximizers: G = B*(B*_lk)^- B* + B*, value ||B* (B*)^-||.
/// Requires B without zero entries and Tr(B) <= 1.
SeminormExtremum hilbert_max_generators(const TropMatrix& b,
                                        double tol = kLogTol);

/// Minimizers: G = sum_{0 <= i+j <= n-1} ||B*||^-1 B^i 1 1^T B^j + B*,
/// value ||B*||. Requires Tr(B) <= 1.
SeminormExtremum hilbert_min_generators(const TropMatrix& b,
                                        double tol = kLogTol);

}  // namespace troprate
