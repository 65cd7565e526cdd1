#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "troprate/scalar.hpp"

namespace troprate {

/// Dense row-major matrix over the max-times semifield. Column vectors are
/// n x 1 matrices and row vectors are 1 x n matrices, so that x^- A x reads
/// as conj_transpose(x) * A * x.
class TropMatrix {
 public:
  TropMatrix() = default;

  /// rows x cols matrix of bottom entries.
  TropMatrix(std::size_t rows, std::size_t cols);

  static TropMatrix zeros(std::size_t rows, std::size_t cols) {
    return TropMatrix(rows, cols);
  }
  static TropMatrix identity(std::size_t n);
  /// Every entry equal to one (the matrix 11^T when rows, cols > 1).
  static TropMatrix ones(std::size_t rows, std::size_t cols);

  /// Build from ordinary nonnegative values; 0 becomes bottom.
  static TropMatrix from_values(
      std::initializer_list<std::initializer_list<double>> rows);
  static TropMatrix from_values(std::size_t rows, std::size_t cols,
                                std::span<const double> values);
  static TropMatrix column(std::span<const TropScalar> entries);
  static TropMatrix column_from_values(std::initializer_list<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  TropScalar operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  TropScalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  /// Flat access, mainly for vectors.
  TropScalar operator[](std::size_t k) const { return entries_[k]; }
  TropScalar& operator[](std::size_t k) { return entries_[k]; }

  std::span<const TropScalar> entries() const { return entries_; }

  TropMatrix column_at(std::size_t j) const;
  TropMatrix row_at(std::size_t i) const;

  /// No bottom entries.
  bool is_positive() const;
  /// No all-bottom column.
  bool is_column_regular() const;
  /// No all-bottom row.
  bool is_row_regular() const;

  /// Ordinary values, row-major.
  std::vector<double> values() const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TropScalar> entries_;
};

/// Entrywise maximum (tropical addition). Shapes must match.
TropMatrix operator+(const TropMatrix& a, const TropMatrix& b);
/// Tropical matrix product, same as trop_matmul.
TropMatrix operator*(const TropMatrix& a, const TropMatrix& b);
/// Scalar multiple.
TropMatrix operator*(TropScalar c, const TropMatrix& a);

/// (AB)_ij = max_k a_ik b_kj. Throws DimensionError when a.cols != b.rows.
TropMatrix trop_matmul(const TropMatrix& a, const TropMatrix& b);

/// (A^-)_ij = 1/a_ji for nonzero a_ji, bottom otherwise.
TropMatrix conj_transpose(const TropMatrix& a);

/// A^k for square A; A^0 = I.
TropMatrix power(const TropMatrix& a, std::size_t k);

/// tr(A): maximum diagonal entry of a square matrix.
TropScalar trace(const TropMatrix& a);

/// Tr(A) = tr(A) + tr(A^2) + ... + tr(A^n).
TropScalar trace_fn(const TropMatrix& a);

/// Kleene star I + B + ... + B^(n-1). Throws InfeasibleError when Tr(B)
/// exceeds one by more than `tol` in the log domain.
TropMatrix kleene_star(const TropMatrix& b, double tol = kLogTol);

/// lambda(A) = max_k tr(A^k)^(1/k), k = 1..n (maximum cycle mean).
TropScalar spectral_radius(const TropMatrix& a);

/// Maximum entry, 1^T A 1.
TropScalar norm(const TropMatrix& a);

/// Multiplicative Hilbert seminorm ||x|| ||x^-|| of a vector (max over min).
/// Returns bottom when x has a bottom entry.
TropScalar hilbert_seminorm(const TropMatrix& x);

/// Entrywise a <= b within `tol` on logarithms.
bool approx_le(const TropMatrix& a, const TropMatrix& b, double tol = kLogTol);
/// Entrywise equality within `tol` on logarithms.
bool approx_eq(const TropMatrix& a, const TropMatrix& b, double tol = kLogTol);

/// Powers A^0 .. A^max_power of a square matrix, computed once.
class PowerCache {
 public:
  PowerCache(const TropMatrix& a, std::size_t max_power);

  const TropMatrix& operator[](std::size_t k) const { return powers_[k]; }
  std::size_t max_power() const { return powers_.size() - 1; }

 private:
  std::vector<TropMatrix> powers_;
};

std::ostream& operator<<(std::ostream& os, const TropMatrix& a);

}  // namespace troprate
