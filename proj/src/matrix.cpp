#include "troprate/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "troprate/errors.hpp"

namespace troprate {

namespace {

void require_square(const TropMatrix& a, const char* op) {
  if (!a.is_square() || a.empty()) {
    std::ostringstream msg;
    msg << op << ": expected a nonempty square matrix, got " << a.rows()
        << "x" << a.cols();
    throw DimensionError(msg.str());
  }
}

}  // namespace

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TropScalar::one();
  return m;
}

TropMatrix TropMatrix::ones(std::size_t rows, std::size_t cols) {
  TropMatrix m(rows, cols);
  std::fill(m.entries_.begin(), m.entries_.end(), TropScalar::one());
  return m;
}

TropMatrix TropMatrix::from_values(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  TropMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged matrix literal");
    std::size_t j = 0;
    for (double v : row) m(i, j++) = TropScalar::from_value(v);
    ++i;
  }
  return m;
}

TropMatrix TropMatrix::from_values(std::size_t rows, std::size_t cols,
                                   std::span<const double> values) {
  if (values.size() != rows * cols) {
    throw DimensionError("value count does not match matrix shape");
  }
  TropMatrix m(rows, cols);
  for (std::size_t k = 0; k < values.size(); ++k) {
    m.entries_[k] = TropScalar::from_value(values[k]);
  }
  return m;
}

TropMatrix TropMatrix::column(std::span<const TropScalar> entries) {
  TropMatrix m(entries.size(), 1);
  std::copy(entries.begin(), entries.end(), m.entries_.begin());
  return m;
}

TropMatrix TropMatrix::column_from_values(std::initializer_list<double> values) {
  return from_values(values.size(), 1,
                     std::span<const double>(values.begin(), values.size()));
}

TropMatrix TropMatrix::column_at(std::size_t j) const {
  TropMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c.entries_[i] = (*this)(i, j);
  return c;
}

TropMatrix TropMatrix::row_at(std::size_t i) const {
  TropMatrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.entries_[j] = (*this)(i, j);
  return r;
}

bool TropMatrix::is_positive() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](TropScalar s) { return s.is_zero(); });
}

bool TropMatrix::is_column_regular() const {
  for (std::size_t j = 0; j < cols_; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < rows_ && !any; ++i) any = (*this)(i, j).is_positive();
    if (!any) return false;
  }
  return true;
}

bool TropMatrix::is_row_regular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < cols_ && !any; ++j) any = (*this)(i, j).is_positive();
    if (!any) return false;
  }
  return true;
}

std::vector<double> TropMatrix::values() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (TropScalar s : entries_) out.push_back(s.value());
  return out;
}

TropMatrix operator+(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("tropical sum of matrices with different shapes");
  }
  TropMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

TropMatrix operator*(const TropMatrix& a, const TropMatrix& b) {
  return trop_matmul(a, b);
}

TropMatrix operator*(TropScalar c, const TropMatrix& a) {
  TropMatrix r(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = c * a[k];
  return r;
}

TropMatrix trop_matmul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "tropical product: " << a.rows() << "x" << a.cols() << " times "
        << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
  TropMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const TropScalar aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

TropMatrix conj_transpose(const TropMatrix& a) {
  TropMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).inverse();
  }
  return t;
}

TropMatrix power(const TropMatrix& a, std::size_t k) {
  require_square(a, "power");
  TropMatrix r = TropMatrix::identity(a.rows());
  for (std::size_t p = 0; p < k; ++p) r = r * a;
  return r;
}

TropScalar trace(const TropMatrix& a) {
  require_square(a, "trace");
  TropScalar t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

PowerCache::PowerCache(const TropMatrix& a, std::size_t max_power) {
  require_square(a, "power cache");
  powers_.reserve(max_power + 1);
  powers_.push_back(TropMatrix::identity(a.rows()));
  for (std::size_t k = 1; k <= max_power; ++k) {
    powers_.push_back(powers_.back() * a);
  }
}

TropScalar trace_fn(const TropMatrix& a) {
  require_square(a, "trace function");
  const PowerCache powers(a, a.rows());
  TropScalar t;
  for (std::size_t k = 1; k <= a.rows(); ++k) t += trace(powers[k]);
  return t;
}

TropMatrix kleene_star(const TropMatrix& b, double tol) {
  require_square(b, "Kleene star");
  const std::size_t n = b.rows();
  const PowerCache powers(b, n);
  TropScalar tr;
  for (std::size_t k = 1; k <= n; ++k) tr += trace(powers[k]);
  if (tr.is_positive() && tr.log() > tol) {
    std::ostringstream msg;
    msg << "infeasible constraints, Tr = " << tr.value();
    throw InfeasibleError(msg.str(), tr.log());
  }
  TropMatrix star = powers[0];
  for (std::size_t k = 1; k < n; ++k) star = star + powers[k];
  return star;
}

TropScalar spectral_radius(const TropMatrix& a) {
  require_square(a, "spectral radius");
  const PowerCache powers(a, a.rows());
  TropScalar lambda;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    lambda += trace(powers[k]).root(static_cast<int>(k));
  }
  return lambda;
}

TropScalar norm(const TropMatrix& a) {
  TropScalar m;
  for (TropScalar s : a.entries()) m += s;
  return m;
}

TropScalar hilbert_seminorm(const TropMatrix& x) {
  if (x.empty() || !x.is_positive()) return TropScalar();
  return norm(x) * norm(conj_transpose(x));
}

bool approx_le(const TropMatrix& a, const TropMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("comparison of matrices with different shapes");
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!approx_le(a[k], b[k], tol)) return false;
  }
  return true;
}

bool approx_eq(const TropMatrix& a, const TropMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!approx_eq(a[k], b[k], tol)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const TropMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      os << a(i, j);
    }
    os << (i + 1 == a.rows() ? "]" : "\n");
  }
  return os;
}

}  // namespace troprate
