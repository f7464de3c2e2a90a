#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tridet/errors.hpp"

namespace tridet {

inline constexpr std::size_t kDefaultDenseLimit = 2048;

/*
 * Compressed n x n tridiagonal matrix
 *
 *   [ d1 a1             ]
 *   [ b1 d2 a2          ]
 *   [    b2 d3 ...      ]
 *   [          ...  an-1]
 *   [          bn-1 dn  ]
 *
 * Only the three diagonals are stored (3n - 2 scalars). Vectors are 0-based
 * in code; indices reported to users (pivot breaks, errors) are 1-based.
 */
template <class T>
class BasicTridiagonal {
 public:
  using value_type = T;

  BasicTridiagonal(std::vector<T> diag, std::vector<T> super, std::vector<T> sub)
      : diag_(std::move(diag)), super_(std::move(super)), sub_(std::move(sub)) {
    if (diag_.empty()) {
      throw DimensionError("tridiagonal matrix needs at least one diagonal entry");
    }
    if (super_.size() != diag_.size() - 1 || sub_.size() != diag_.size() - 1) {
      throw DimensionError("off-diagonals must have length n-1 = " +
                           std::to_string(diag_.size() - 1) + " (got " +
                           std::to_string(super_.size()) + " and " +
                           std::to_string(sub_.size()) + ")");
    }
    if constexpr (std::is_floating_point_v<T>) {
      check_finite(diag_, "main diagonal");
      check_finite(super_, "superdiagonal");
      check_finite(sub_, "subdiagonal");
    }
  }

  std::size_t order() const noexcept { return diag_.size(); }

  /// Main diagonal d_1..d_n.
  std::span<const T> diag() const noexcept { return diag_; }
  /// Superdiagonal a_1..a_{n-1}, entry (i, i+1).
  std::span<const T> super() const noexcept { return super_; }
  /// Subdiagonal b_1..b_{n-1}, entry (i+1, i).
  std::span<const T> sub() const noexcept { return sub_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < super_.size(); ++i) {
      if (!(super_[i] == sub_[i])) return false;
    }
    return true;
  }

  friend bool operator==(const BasicTridiagonal&, const BasicTridiagonal&) = default;

 private:
  static void check_finite(const std::vector<T>& v, const char* which) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i])) {
        throw NonFiniteError(std::string("non-finite entry in ") + which + " at position " +
                             std::to_string(i + 1));
      }
    }
  }

  std::vector<T> diag_;
  std::vector<T> super_;
  std::vector<T> sub_;
};

using TridiagonalMatrix = BasicTridiagonal<double>;

/// Validating constructor: d has n entries, a (super) and b (sub) n-1.
TridiagonalMatrix make_matrix(std::vector<double> d, std::vector<double> a, std::vector<double> b);

/// Row-major dense square matrix, used only by the brute-force oracles.
template <class T>
class SquareGrid {
 public:
  SquareGrid() = default;
  explicit SquareGrid(std::size_t n) : n_(n), cells_(n * n, T(0)) {}

  std::size_t order() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  friend bool operator==(const SquareGrid&, const SquareGrid&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

/// Expands to a dense grid. Throws DimensionError when n exceeds `limit`.
template <class T>
SquareGrid<T> to_dense(const BasicTridiagonal<T>& m, std::size_t limit = kDefaultDenseLimit) {
  const std::size_t n = m.order();
  if (n > limit) {
    throw DimensionError("order " + std::to_string(n) + " exceeds dense limit " +
                         std::to_string(limit));
  }
  SquareGrid<T> g(n);
  const auto d = m.diag();
  const auto a = m.super();
  const auto b = m.sub();
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = d[i];
    if (i + 1 < n) {
      g(i, i + 1) = a[i];
      g(i + 1, i) = b[i];
    }
  }
  return g;
}

/*
 * Overflow-safe real value: sign in {-1, 0, +1} and natural log of |x|.
 * Zero has sign 0 and logmag = -inf.
 */
class SignedLogValue {
 public:
  constexpr SignedLogValue() = default;
  SignedLogValue(int sign, double logmag);

  static SignedLogValue from_scalar(double x);
  static constexpr SignedLogValue zero() { return SignedLogValue(); }

  int sign() const noexcept { return sign_; }
  double logmag() const noexcept { return logmag_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  /// Decodes back to a double; overflows to +-inf when logmag > ~709.78.
  double to_scalar() const;

  friend SignedLogValue operator*(const SignedLogValue& x, const SignedLogValue& y);
  friend bool operator==(const SignedLogValue& x, const SignedLogValue& y);

 private:
  int sign_ = 0;
  double logmag_ = -std::numeric_limits<double>::infinity();
};

std::string to_string(const SignedLogValue& v);

enum class ArithmeticMode { Plain, Scaled };

/// Leading principal minors f_0..f_n, f_0 = 1.
class MinorSequence {
 public:
  static MinorSequence plain(std::vector<double> f);
  static MinorSequence scaled(std::vector<SignedLogValue> f);

  ArithmeticMode mode() const noexcept { return mode_; }
  /// n, the index of the last minor.
  std::size_t order() const noexcept;
  /// f_i as a double; in scaled mode this may overflow to +-inf.
  double value(std::size_t i) const;
  SignedLogValue signed_log(std::size_t i) const;

 private:
  ArithmeticMode mode_ = ArithmeticMode::Plain;
  std::vector<double> plain_;
  std::vector<SignedLogValue> scaled_;
};

}  // namespace tridet
