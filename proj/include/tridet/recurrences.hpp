#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "tridet/core.hpp"
#include "tridet/exact.hpp"

namespace tridet {

inline constexpr double kDefaultRelativeZeroTol = 1e-13;

/*
 * Decides when a pivot c_m counts as vanished.
 *
 *   exact     c_m == 0
 *   absolute  |c_m| <= tol           (tol = 0 is the exact test)
 *   relative  |c_m| <= tol * (|d_m| + |a_{m-1} b_{m-1} / c_{m-1}|)
 *
 * The relative form measures c_m against the two terms whose cancellation
 * produced it.
 */
class ZeroTest {
 public:
  enum class Kind { Exact, Absolute, Relative };

  static constexpr ZeroTest exact() { return ZeroTest(Kind::Exact, 0.0); }
  static ZeroTest absolute(double tol);
  static ZeroTest relative(double tol = kDefaultRelativeZeroTol);

  Kind kind() const noexcept { return kind_; }
  double tolerance() const noexcept { return tol_; }

  /// `quotient` is a_{m-1} b_{m-1} / c_{m-1} (zero for m = 1).
  bool is_zero(double pivot, double diag, double quotient) const noexcept {
    switch (kind_) {
      case Kind::Exact:
        return pivot == 0.0;
      case Kind::Absolute:
        return std::fabs(pivot) <= tol_;
      case Kind::Relative:
        return std::fabs(pivot) <= tol_ * (std::fabs(diag) + std::fabs(quotient));
    }
    return pivot == 0.0;
  }

 private:
  constexpr ZeroTest(Kind kind, double tol) : kind_(kind), tol_(tol) {}

  Kind kind_;
  double tol_;
};

/*
 * Pivot vector c_1..c_k with c_1 = d_1 and c_i = d_i - a_{i-1} b_{i-1} / c_{i-1}.
 *
 * The sweep stops at the first interior pivot (index < n) that vanishes; that
 * 1-based index is `break_index` and c has exactly break_index entries. A
 * vanishing c_n is stored in c but is not a break: nothing divides by it.
 */
template <class T>
struct BasicPivotSequence {
  std::vector<T> c;
  std::optional<std::size_t> break_index;
};

using PivotSequence = BasicPivotSequence<double>;
using RationalPivotSequence = BasicPivotSequence<Rational>;

enum class Algorithm { TwoTerm, ThreeTerm, Hybrid, Detgtri };

std::string_view to_string(Algorithm alg);

/// Work counters; every kernel performs pivot_updates + three_term_steps = n - 1.
struct StepCounts {
  std::size_t pivot_updates = 0;
  std::size_t three_term_steps = 0;

  std::size_t total() const noexcept { return pivot_updates + three_term_steps; }
};

struct DetResult {
  std::variant<double, SignedLogValue> value;
  Algorithm algorithm = Algorithm::Hybrid;
  /// 1-based index where the hybrid switched to the three-term recurrence.
  std::optional<std::size_t> pivot_break;
  StepCounts steps;

  bool is_scaled() const noexcept { return std::holds_alternative<SignedLogValue>(value); }
  /// The determinant as a double (decodes the scaled form, which may overflow).
  double scalar() const;
  SignedLogValue signed_log() const;
};

struct ExactDetResult {
  Rational value;
  Algorithm algorithm = Algorithm::Hybrid;
  std::optional<std::size_t> pivot_break;
  StepCounts steps;
};

PivotSequence pivot_sequence(const TridiagonalMatrix& m, ZeroTest zero = ZeroTest::exact());
RationalPivotSequence pivot_sequence(const RationalTridiagonal& m);

/// det = c_1 c_2 ... c_n. Throws ZeroPivotError if some c_k, k < n, vanishes
/// exactly, and OverflowError on a non-finite result.
DetResult det_two_term(const TridiagonalMatrix& m);
ExactDetResult det_two_term(const RationalTridiagonal& m);

/// f_i = d_i f_{i-1} - a_{i-1} b_{i-1} f_{i-2}, f_0 = 1, f_1 = d_1.
DetResult det_three_term(const TridiagonalMatrix& m);
ExactDetResult det_three_term(const RationalTridiagonal& m);

/// Pivot products until a pivot vanishes, then the three-term recurrence to
/// the end. Never switches back.
DetResult det_hybrid(const TridiagonalMatrix& m, ZeroTest zero = ZeroTest::exact());
ExactDetResult det_hybrid(const RationalTridiagonal& m);

/// Same control flow as det_hybrid, evaluated on a mantissa/binary-exponent
/// representation so that no intermediate overflows or underflows. A pivot
/// that is itself non-finite also triggers the switch.
DetResult det_hybrid_scaled(const TridiagonalMatrix& m, ZeroTest zero = ZeroTest::exact());

/// f_0..f_n following the hybrid's control flow.
MinorSequence principal_minors(const TridiagonalMatrix& m,
                               ArithmeticMode mode = ArithmeticMode::Plain,
                               ZeroTest zero = ZeroTest::exact());
std::vector<Rational> principal_minors(const RationalTridiagonal& m);

}  // namespace tridet
