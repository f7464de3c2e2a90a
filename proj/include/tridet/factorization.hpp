#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tridet/core.hpp"

namespace tridet {

enum class LuConvention { Doolittle, Crout };

std::string_view to_string(LuConvention c);

/*
 * T = L U with L lower bidiagonal (l_diag, l_sub) and U upper bidiagonal
 * (u_diag, u_super). With pivots c from the pivot recurrence:
 *
 *   Doolittle: l_diag = 1, l_sub_i = b_i / c_i, u_diag = c, u_super = a
 *   Crout:     l_diag = c, l_sub = b, u_diag = 1, u_super_i = a_i / c_i
 */
struct LUFactors {
  LuConvention convention = LuConvention::Doolittle;
  std::vector<double> l_diag;
  std::vector<double> l_sub;
  std::vector<double> u_diag;
  std::vector<double> u_super;

  std::size_t order() const noexcept { return l_diag.size(); }
  /// The diagonal that carries the pivots (u_diag or l_diag).
  const std::vector<double>& pivots() const noexcept {
    return convention == LuConvention::Doolittle ? u_diag : l_diag;
  }
  TridiagonalMatrix lower() const;
  TridiagonalMatrix upper() const;
};

/// Throws ZeroPivotError when some interior pivot c_k (k < n) is exactly 0.
/// A zero c_n is allowed and yields a singular factor.
LUFactors lu_factorize(const TridiagonalMatrix& m, LuConvention convention);

/// The tridiagonal product L U.
TridiagonalMatrix multiply(const LUFactors& f);

struct PdVerdict {
  bool positive_definite = false;
  /// c_1..c_k, computed up to and including the first non-positive pivot.
  std::vector<double> pivots;
  /// 1-based index of the first non-positive pivot.
  std::optional<std::size_t> failing_index;
};

/// Symmetric tridiagonal T is positive definite iff every c_i > 0 (strict, no
/// tolerance). Throws NotSymmetricError unless a_i == b_i for all i.
PdVerdict is_positive_definite(const TridiagonalMatrix& m);

}  // namespace tridet
