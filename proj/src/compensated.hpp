#pragma once

// Double-double arithmetic (value = hi + lo, |lo| <= ulp(hi)/2) built from
// error-free transformations. Used for the pivot recurrence and the running
// pivot product, whose rounding errors otherwise accumulate linearly in n.

#include <cmath>

namespace tridet::detail {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double value() const noexcept { return hi + lo; }
};

inline DoubleDouble quick_two_sum(double a, double b) noexcept {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

#if defined(__FP_FAST_FMA)
inline DoubleDouble two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}
#else
// Dekker's product. Operands above 2^995 are pre-scaled so the splitter
// cannot overflow.
inline void split(double a, double& high, double& low) noexcept {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  if (std::fabs(a) > 0x1p995) {
    const double s = a * 0x1p-28;
    const double t = kSplitter * s;
    high = (t - (t - s)) * 0x1p28;
    low = a - high;
    return;
  }
  const double t = kSplitter * a;
  high = t - (t - a);
  low = a - high;
}

inline DoubleDouble two_prod(double a, double b) noexcept {
  const double p = a * b;
  double ah, al, bh, bl;
  split(a, ah, al);
  split(b, bh, bl);
  return {p, ((ah * bh - p) + ah * bl + al * bh) + al * bl};
}
#endif

inline DoubleDouble operator*(const DoubleDouble& x, const DoubleDouble& y) noexcept {
  DoubleDouble p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(const DoubleDouble& x, const DoubleDouble& y) noexcept {
  const double q1 = x.hi / y.hi;
  // r = x - q1 * y
  DoubleDouble prod = two_prod(q1, y.hi);
  prod.lo += q1 * y.lo;
  DoubleDouble r = two_sum(x.hi, -prod.hi);
  r.lo += x.lo - prod.lo;
  const double q2 = (r.hi + r.lo) / y.hi;
  return quick_two_sum(q1, q2);
}

/// d - q for a double d.
inline DoubleDouble minus(double d, const DoubleDouble& q) noexcept {
  DoubleDouble s = two_sum(d, -q.hi);
  s.lo -= q.lo;
  return quick_two_sum(s.hi, s.lo);
}

}  // namespace tridet::detail
