#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "troprate/errors.hpp"
#include "troprate/inequality.hpp"

using namespace troprate;
using fixtures::frac;

TEST_CASE("upper bound of Ax <= d") {
  CHECK(approx_eq(solve_upper_bound(TropMatrix::identity(2),
                                    TropMatrix::column_from_values({2, 3})),
                  TropMatrix::column_from_values({2, 3})));

  const TropMatrix a = TropMatrix::from_values({{1, 2}, {0.5, 1}});
  const TropMatrix d = TropMatrix::column_from_values({1, 1});
  // x_j = min_i d_i / a_ij
  const TropMatrix x = solve_upper_bound(a, d);
  CHECK(approx_eq(x, TropMatrix::column_from_values({1, 0.5})));
  CHECK(approx_le(a * x, d));

  CHECK_THROWS_AS(solve_upper_bound(TropMatrix::from_values({{1, 0}, {1, 0}}), d),
                  PreconditionError);
  CHECK_THROWS_AS(solve_upper_bound(a, TropMatrix::column_from_values({1, 0})),
                  PreconditionError);
}

TEST_CASE("upper bound properties") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> shrink(0.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 4;
    TropMatrix a = fixtures::random_positive(n, rng);
    a(0, 0) = TropScalar();  // still column-regular
    const TropMatrix d = fixtures::random_u(n, rng);
    const TropMatrix xbar = solve_upper_bound(a, d);
    CHECK(approx_le(a * xbar, d));
    for (int k = 0; k < 20; ++k) {
      TropMatrix x = xbar;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = x[i] * TropScalar::from_log(-shrink(rng));
      }
      CHECK(approx_le(a * x, d));
    }
  }
}

TEST_CASE("closure Bx <= x") {
  CHECK(solve_closure(TropMatrix::zeros(3, 3)).matrix == TropMatrix::identity(3));

  // B^2 = 0, so B* = I + B.
  TropMatrix expected = TropMatrix::identity(4);
  expected(2, 3) = TropScalar::one();
  CHECK(solve_closure(fixtures::constraint_b()).matrix == expected);

  try {
    solve_closure(frac(2) * TropMatrix::identity(2));
    FAIL("expected infeasibility");
  } catch (const InfeasibleError& e) {
    CHECK(e.trace_value() == doctest::Approx(4.0));
  }
}

TEST_CASE("closure generators solve the inequality") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 4;
    const TropMatrix b = fixtures::random_wide_b(n, rng, 0.4);
    const GeneratorSet g = solve_closure(b);
    CHECK(g.matrix.is_column_regular());
    CHECK(approx_eq(g.matrix * g.matrix, g.matrix));
    for (int k = 0; k < 20; ++k) {
      const TropMatrix x = g.apply(fixtures::random_u(n, rng));
      CHECK(approx_le(b * x, x));
    }
  }
}

TEST_CASE("every grid solution of Bx <= x is generated") {
  // x in the span of B* iff B* (x^- B*)^- = x.
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + t % 2;
    const TropMatrix b = fixtures::random_wide_b(n, rng, 0.6);
    const TropMatrix star = solve_closure(b).matrix;
    int members = 0;
    const double step = 0.25;
    const int span = 12;
    std::vector<int> idx(n, -span);
    for (;;) {
      TropMatrix x(n, 1);
      for (std::size_t i = 0; i < n; ++i) x[i] = TropScalar::from_log(idx[i] * step);
      if (approx_le(b * x, x)) {
        ++members;
        const TropMatrix u = conj_transpose(conj_transpose(x) * star);
        CHECK(approx_eq(star * u, x));
      }
      std::size_t k = 0;
      while (k < n && ++idx[k] > span) idx[k++] = -span;
      if (k == n) break;
    }
    CHECK(members > 0);
  }
}
