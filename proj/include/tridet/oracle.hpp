#pragma once

#include <cstddef>

#include "tridet/core.hpp"
#include "tridet/exact.hpp"

namespace tridet {

inline constexpr std::size_t kDefaultExactDenseLimit = 64;

// Brute-force dense determinants. They ignore the tridiagonal structure on
// purpose and share no code with the recurrence kernels.

/// Gaussian elimination with partial pivoting, O(n^3).
double dense_det_float(const SquareGrid<double>& g, std::size_t limit = kDefaultDenseLimit);

/// Fraction-free (Bareiss) elimination over the integers after clearing
/// denominators; exact for any rational grid.
Rational dense_det_exact(const SquareGrid<Rational>& g,
                         std::size_t limit = kDefaultExactDenseLimit);

}  // namespace tridet
