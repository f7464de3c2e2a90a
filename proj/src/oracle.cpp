#include "tridet/oracle.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace tridet {
namespace {

void check_limit(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw DimensionError("order " + std::to_string(n) + " exceeds dense limit " +
                         std::to_string(limit));
  }
}

}  // namespace

double dense_det_float(const SquareGrid<double>& g, std::size_t limit) {
  const std::size_t n = g.order();
  check_limit(n, limit);
  SquareGrid<double> w = g;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(w(i, k)) > std::fabs(w(piv, k))) piv = i;
    }
    if (w(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(w(k, j), w(piv, j));
      det = -det;
    }
    const double pivot = w(k, k);
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = w(i, k) / pivot;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= factor * w(k, j);
    }
  }
  return det;
}

Rational dense_det_exact(const SquareGrid<Rational>& g, std::size_t limit) {
  const std::size_t n = g.order();
  check_limit(n, limit);
  if (n == 0) return Rational(1);

  // Scale every entry by L = lcm of denominators; det(L G) = L^n det(G).
  Integer lcm = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g(i, j).get_den_mpz_t());
  }
  std::vector<Integer> w(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = g(i, j).get_num() * (lcm / g(i, j).get_den());
  }
  const auto at = [&w, n](std::size_t i, std::size_t j) -> Integer& { return w[i * n + j]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(at(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(t);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }

  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lcm.get_mpz_t(), n);
  Rational det(sign * at(n - 1, n - 1), scale);
  det.canonicalize();
  return det;
}

}  // namespace tridet
