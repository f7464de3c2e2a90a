#include "doctest.h"
#include "test_support.hpp"

using namespace tridet;
using namespace tridet::testing;

namespace {

SquareGrid<double> grid(std::initializer_list<std::initializer_list<double>> rows) {
  SquareGrid<double> g(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (double x : row) g(i, j++) = x;
    ++i;
  }
  return g;
}

}  // namespace

TEST_CASE("dense_det_float examples") {
  CHECK(dense_det_float(grid({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(dense_det_float(to_dense(gen_example(Family::Ex31, 4))) == doctest::Approx(-1).epsilon(1e-14));
  CHECK(dense_det_float(grid({{0, 1}, {1, 0}})) == -1);
  CHECK(dense_det_float(grid({{1, 2}, {2, 4}})) == 0);
  CHECK(dense_det_float(SquareGrid<double>(0)) == 1);
}

TEST_CASE("dense_det_exact examples") {
  const auto e5 = make_matrix({1, 2, 2, 1}, {1, 1, 1}, {2, 2, 2});
  CHECK(exact_dense(e5) == -2);
  CHECK(dense_det_exact(SquareGrid<Rational>(2)) == 0);
  CHECK(exact_dense(gen_example(Family::Ex34, 7)) == Rational(closed_form_det(Family::Ex34, 7)));
  CHECK(exact_dense(gen_example(Family::Ex34, 7)) == -1575);

  SquareGrid<Rational> h(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = Rational(1, static_cast<long>(i + j + 1));
  }
  CHECK(dense_det_exact(h) == Rational(1, 2160));
}

TEST_CASE("dense limits") {
  CHECK_THROWS_AS(dense_det_exact(SquareGrid<Rational>(65)), DimensionError);
  CHECK_NOTHROW(dense_det_exact(SquareGrid<Rational>(8), 8));
  CHECK_THROWS_AS(dense_det_float(SquareGrid<double>(9), 8), DimensionError);
}

TEST_CASE("integer grids give integer determinants") {
  Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = uniform_size(rng, 1, 10);
    SquareGrid<Rational> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = uniform_int(rng, -5, 5);
    }
    CHECK(dense_det_exact(g).get_den() == 1);
  }
}

TEST_CASE("float and exact oracles agree on full integer grids") {
  Rng rng(102);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = uniform_size(rng, 1, 10);
    SquareGrid<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = uniform_int(rng, -5, 5);
    }
    const Rational ex = dense_det_exact(to_rational(g));
    // Integer determinant: the scale is floored at 1.
    REQUIRE(rel_close_floor(dense_det_float(g), ex.get_d(), 1e-9));
  }
}

TEST_CASE("oracle is independent of the recurrences on tridiagonal input") {
  Rng rng(103);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_zero_pivot_matrix(rng, uniform_size(rng, 1, 10), -5, 5).matrix;
    CHECK(exact_dense(m) == det_three_term(to_rational(m)).value);
  }
}
