#pragma once

// Shared test data and independent reference computations. Everything in
// here works on plain doubles so that it does not share code paths with
// the library under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "troprate/matrix.hpp"
#include "troprate/multicriteria.hpp"

namespace fixtures {

using troprate::TropMatrix;
using troprate::TropScalar;

inline TropScalar frac(std::int64_t p, std::int64_t q = 1) {
  return TropScalar::from_ratio(p, q);
}

// Four alternatives, four criteria and the constraint x3 >= x4.
inline TropMatrix c1() {
  return TropMatrix::from_values({{1, 2, 3, 4},
                                  {1. / 2, 1, 3, 2},
                                  {1. / 3, 1. / 3, 1, 1. / 3},
                                  {1. / 4, 1. / 2, 3, 1}});
}
inline TropMatrix c2() {
  return TropMatrix::from_values({{1, 2, 3, 4},
                                  {1. / 2, 1, 2, 3},
                                  {1. / 3, 1. / 2, 1, 2},
                                  {1. / 4, 1. / 3, 1. / 2, 1}});
}
inline TropMatrix c3() {
  return TropMatrix::from_values({{1, 3, 2, 3},
                                  {1. / 3, 1, 2, 4},
                                  {1. / 2, 1. / 2, 1, 1},
                                  {1. / 3, 1. / 4, 1, 1}});
}
inline TropMatrix c4() {
  return TropMatrix::from_values({{1, 2, 2, 1},
                                  {1. / 2, 1, 1. / 2, 3},
                                  {1. / 2, 2, 1, 2},
                                  {1, 1. / 3, 1. / 2, 1}});
}
inline TropMatrix constraint_b() {
  TropMatrix b(4, 4);
  b(2, 3) = TropScalar::one();
  return b;
}

inline troprate::ComparisonProblem example_problem() {
  troprate::ComparisonProblem p;
  p.criteria = {c1(), c2(), c3(), c4()};
  p.constraints = constraint_b();
  return p;
}

// --- plain-double references -------------------------------------------

using Dense = std::vector<std::vector<double>>;

inline Dense dense(const TropMatrix& m) {
  Dense d(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j).value();
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<double>(b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        c[i][j] = std::max(c[i][j], a[i][k] * b[k][j]);
  return c;
}

// Maximum cycle mean (geometric) over all simple cycles, by enumerating
// every ordered vertex sequence without repetition.
inline double max_cycle_mean(const Dense& a) {
  const std::size_t n = a.size();
  double best = 0.0;
  std::vector<std::size_t> path;
  std::vector<char> used(n, 0);
  std::function<void(double)> walk = [&](double prod) {
    const std::size_t last = path.back();
    const double closing = prod * a[last][path.front()];
    if (closing > 0.0) {
      best = std::max(best, std::pow(closing, 1.0 / path.size()));
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || v < path.front() || a[last][v] == 0.0) continue;
      used[v] = 1;
      path.push_back(v);
      walk(prod * a[last][v]);
      path.pop_back();
      used[v] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, 0);
    used[s] = 1;
    walk(1.0);
  }
  return best;
}

// --- random instances --------------------------------------------------

inline const std::vector<double>& saaty_scale() {
  static const std::vector<double> scale = [] {
    std::vector<double> s;
    for (int k = 9; k >= 2; --k) s.push_back(1.0 / k);
    for (int k = 1; k <= 9; ++k) s.push_back(k);
    return s;
  }();
  return scale;
}

// Reciprocal matrix with upper entries drawn from {1/9, ..., 9}; exact
// fractions in the log domain.
inline TropMatrix random_reciprocal(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(-8, 8);  // k -> k+1 or 1/(1-k)
  TropMatrix c = TropMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int k = pick(rng);
      const TropScalar v = k >= 0 ? frac(k + 1) : frac(1, 1 - k);
      c(i, j) = v;
      c(j, i) = v.inverse();
    }
  }
  return c;
}

// Random positive matrix with entries in [1/9, 9].
inline TropMatrix random_positive(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-std::log(9.0), std::log(9.0));
  TropMatrix a(n, n);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = TropScalar::from_log(u(rng));
  return a;
}

// Sparse constraint matrix with entries from {1/4, 1/3, 1/2, 1}; every
// cycle product is at most one, so Tr(B) <= 1.
inline TropMatrix random_feasible_b(std::size_t n, std::mt19937& rng,
                                    double density = 0.3) {
  std::bernoulli_distribution on(density);
  std::uniform_int_distribution<int> den(1, 4);
  TropMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && on(rng)) b(i, j) = frac(1, den(rng));
  return b;
}

// Constraint matrix allowed to carry entries above one (up to 3); resampled
// until Tr(B) <= 1.
inline TropMatrix random_wide_b(std::size_t n, std::mt19937& rng,
                                double density = 0.3) {
  std::bernoulli_distribution on(density);
  std::uniform_real_distribution<double> u(-std::log(4.0), std::log(3.0));
  for (;;) {
    TropMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (on(rng)) b(i, j) = TropScalar::from_log(u(rng));
    const TropScalar tr = troprate::trace_fn(b);
    if (tr.is_zero() || tr.log() <= 0.0) return b;
  }
}

// Random positive parameter vector u with log entries in [-3, 3].
inline TropMatrix random_u(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  TropMatrix v(n, 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = TropScalar::from_log(u(rng));
  return v;
}

// Visits every log-domain point y with one coordinate pinned at 0 and the
// others on {0, -h, ..., -L}. Points are passed as positive columns.
inline void for_each_grid_point(std::size_t n, double half_width, double step,
                                const std::function<void(const TropMatrix&)>& f) {
  const int steps = static_cast<int>(std::floor(half_width / step + 1e-9));
  std::vector<int> idx(n, 0);
  TropMatrix x(n, 1);
  for (std::size_t pin = 0; pin < n; ++pin) {
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      for (std::size_t i = 0; i < n; ++i) x[i] = TropScalar::from_log(-idx[i] * step);
      f(x);
      std::size_t k = 0;
      while (k < n) {
        if (k == pin) { ++k; continue; }
        if (++idx[k] <= steps) break;
        idx[k++] = 0;
      }
      if (k == n) break;
    }
  }
}

}  // namespace fixtures
