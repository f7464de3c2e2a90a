#pragma once

// Scalar-generic recurrence loops shared by the double and exact-rational
// entry points. Indices in comments are 1-based to match c_m / f_m; vectors
// are 0-based.
//
// Pivot updates and the pivot product go through PivotArith<T>: exact for
// Rational, double-double for double. The three-term recurrence always runs
// in T.

#include <cstddef>
#include <optional>
#include <vector>

#include "compensated.hpp"
#include "tridet/core.hpp"
#include "tridet/errors.hpp"
#include "tridet/exact.hpp"
#include "tridet/recurrences.hpp"

namespace tridet::detail {

template <class T>
struct PivotArith;

template <>
struct PivotArith<Rational> {
  using Wide = Rational;

  struct Zero {
    bool operator()(const Wide& pivot, const Rational&, const Rational&) const {
      return sgn(pivot) == 0;
    }
  };

  static Wide quotient(const Rational& a, const Rational& b, const Wide& prev) {
    return a * b / prev;
  }
  static Wide pivot(const Rational& d, const Wide& quotient) { return d - quotient; }
  static Wide times(const Wide& f, const Wide& c) { return f * c; }
  static Rational narrow(const Wide& x) { return x; }
  static const Rational& narrow_quotient(const Wide& q) { return q; }
};

template <>
struct PivotArith<double> {
  using Wide = DoubleDouble;

  struct Zero {
    ZeroTest test;
    bool operator()(const Wide& pivot, double diag, double quotient) const noexcept {
      // hi == 0 implies lo == 0 for a normalized pair.
      return test.kind() == ZeroTest::Kind::Exact ? pivot.hi == 0.0
                                                  : test.is_zero(pivot.value(), diag, quotient);
    }
  };

  static Wide quotient(double a, double b, const Wide& prev) noexcept {
    return DoubleDouble(two_prod(a, b)) / prev;
  }
  static Wide pivot(double d, const Wide& quotient) noexcept { return minus(d, quotient); }
  static Wide times(const Wide& f, const Wide& c) noexcept { return f * c; }
  static double narrow(const Wide& x) noexcept { return x.value(); }
  static double narrow_quotient(const Wide& q) noexcept { return q.value(); }
};

template <class T>
struct KernelOutcome {
  T value;
  std::optional<std::size_t> pivot_break;
  StepCounts steps;
};

struct NoSink {
  template <class T>
  void operator()(std::size_t, const T&) const noexcept {}
};

template <class T, class IsZero>
BasicPivotSequence<T> pivot_sweep(const BasicTridiagonal<T>& m, IsZero is_zero) {
  using Ops = PivotArith<T>;
  using Wide = typename Ops::Wide;
  const std::size_t n = m.order();
  const auto d = m.diag();
  const auto a = m.super();
  const auto b = m.sub();

  BasicPivotSequence<T> out;
  out.c.reserve(n);
  Wide c = Wide(d[0]);
  out.c.push_back(d[0]);
  if (n > 1 && is_zero(c, d[0], T(0))) {
    out.break_index = 1;
    return out;
  }
  for (std::size_t i = 1; i < n; ++i) {
    const Wide q = Ops::quotient(a[i - 1], b[i - 1], c);
    c = Ops::pivot(d[i], q);
    out.c.push_back(Ops::narrow(c));
    if (i + 1 < n && is_zero(c, d[i], Ops::narrow_quotient(q))) {
      out.break_index = i + 1;
      break;
    }
  }
  return out;
}

template <class T>
KernelOutcome<T> two_term(const BasicTridiagonal<T>& m) {
  using Ops = PivotArith<T>;
  using Wide = typename Ops::Wide;
  const std::size_t n = m.order();
  const auto d = m.diag();
  const auto a = m.super();
  const auto b = m.sub();

  Wide c = Wide(d[0]);
  Wide f = c;
  StepCounts steps;
  for (std::size_t i = 1; i < n; ++i) {
    if (Ops::narrow(c) == T(0)) {
      throw ZeroPivotError(i, "two-term recurrence is undefined past a vanishing pivot");
    }
    c = Ops::pivot(d[i], Ops::quotient(a[i - 1], b[i - 1], c));
    f = Ops::times(f, c);
    ++steps.pivot_updates;
  }
  return {Ops::narrow(f), std::nullopt, steps};
}

template <class T, class Sink = NoSink>
KernelOutcome<T> three_term(const BasicTridiagonal<T>& m, Sink&& sink = {}) {
  const std::size_t n = m.order();
  const auto d = m.diag();
  const auto a = m.super();
  const auto b = m.sub();

  T f_prev = T(1);
  T f = d[0];
  sink(1, f);
  StepCounts steps;
  for (std::size_t i = 1; i < n; ++i) {
    T next = d[i] * f - a[i - 1] * b[i - 1] * f_prev;
    f_prev = std::move(f);
    f = std::move(next);
    sink(i + 1, f);
    ++steps.three_term_steps;
  }
  return {std::move(f), std::nullopt, steps};
}

/*
 * Step 1: c_1 = f_1 = d_1, m = 1.
 * Step 2: while m <= n-1 and c_m != 0: m += 1, c_m from the pivot
 *         recurrence, f_m = c_m f_{m-1}.
 * Step 3: for k = m+1..n: f_k = d_k f_{k-1} - a_{k-1} b_{k-1} f_{k-2}.
 * Step 4: return f_n.
 */
template <class T, class IsZero, class Sink = NoSink>
KernelOutcome<T> hybrid(const BasicTridiagonal<T>& m, IsZero is_zero, Sink&& sink = {}) {
  using Ops = PivotArith<T>;
  using Wide = typename Ops::Wide;
  const std::size_t n = m.order();
  const auto d = m.diag();
  const auto a = m.super();
  const auto b = m.sub();

  Wide c = Wide(d[0]);
  Wide f_prev = Wide(T(1));
  Wide f = c;
  sink(1, d[0]);
  std::size_t idx = 1;
  bool vanished = is_zero(c, d[0], T(0));
  StepCounts steps;

  while (idx <= n - 1 && !vanished) {
    ++idx;
    const Wide q = Ops::quotient(a[idx - 2], b[idx - 2], c);
    c = Ops::pivot(d[idx - 1], q);
    vanished = is_zero(c, d[idx - 1], Ops::narrow_quotient(q));
    Wide next = Ops::times(f, c);
    f_prev = std::move(f);
    f = std::move(next);
    sink(idx, Ops::narrow(f));
    ++steps.pivot_updates;
  }

  std::optional<std::size_t> pivot_break;
  if (idx < n) pivot_break = idx;

  T g = Ops::narrow(f);
  T g_prev = Ops::narrow(f_prev);
  for (std::size_t k = idx + 1; k <= n; ++k) {
    T next = d[k - 1] * g - a[k - 2] * b[k - 2] * g_prev;
    g_prev = std::move(g);
    g = std::move(next);
    sink(k, g);
    ++steps.three_term_steps;
  }
  return {std::move(g), pivot_break, steps};
}

}  // namespace tridet::detail
