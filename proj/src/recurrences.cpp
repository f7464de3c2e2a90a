#include "tridet/recurrences.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "recurrence_kernels.hpp"

namespace tridet {
namespace {

using ExactZero = detail::PivotArith<Rational>::Zero;
using DoubleZero = detail::PivotArith<double>::Zero;
using detail::DoubleDouble;

double checked(double value, const char* kernel) {
  if (!std::isfinite(value)) {
    throw OverflowError(std::string(kernel) +
                        ": non-finite intermediate in plain mode; retry in scaled mode");
  }
  return value;
}

template <class Outcome>
DetResult plain_result(Outcome&& out, Algorithm alg, const char* kernel) {
  DetResult r;
  r.value = checked(out.value, kernel);
  r.algorithm = alg;
  r.pivot_break = out.pivot_break;
  r.steps = out.steps;
  return r;
}

template <class Outcome>
ExactDetResult exact_result(Outcome&& out, Algorithm alg) {
  return ExactDetResult{std::move(out.value), alg, out.pivot_break, out.steps};
}

// value = mant * 2^exp2, with 0.5 <= |mant| < 1 unless the value is zero.
struct ScaledReal {
  long double mant = 0.0L;
  long long exp2 = 0;

  static ScaledReal from(long double x) {
    ScaledReal s{x, 0};
    s.normalize();
    return s;
  }

  void normalize() {
    if (mant == 0.0L) {
      exp2 = 0;
      return;
    }
    int e = 0;
    mant = std::frexp(mant, &e);
    exp2 += e;
  }

  ScaledReal times(const DoubleDouble& c) const {
    int e = 0;
    const long double cm =
        std::frexp(static_cast<long double>(c.hi) + static_cast<long double>(c.lo), &e);
    ScaledReal s{mant * cm, exp2 + e};
    s.normalize();
    return s;
  }

  SignedLogValue to_signed_log() const {
    if (mant == 0.0L) return SignedLogValue::zero();
    const double logmag = static_cast<double>(std::log(std::fabs(mant))) +
                          static_cast<double>(exp2) * std::numbers::ln2;
    return SignedLogValue(mant < 0 ? -1 : 1, logmag);
  }
};

// d * p - (a b) * q evaluated at the larger of the two exponents.
ScaledReal three_term_step(double d, double a, double b, const ScaledReal& p, const ScaledReal& q) {
  long long e = 0;
  if (p.mant != 0.0L && q.mant != 0.0L) {
    e = std::max(p.exp2, q.exp2);
  } else if (p.mant != 0.0L) {
    e = p.exp2;
  } else if (q.mant != 0.0L) {
    e = q.exp2;
  } else {
    return {};
  }
  // Exponent gaps beyond the extended range only drop terms that are
  // negligible against the surviving one.
  const auto shift = [e](const ScaledReal& s) -> long double {
    if (s.mant == 0.0L) return 0.0L;
    const long long gap = s.exp2 - e;
    return gap < -16000 ? 0.0L : std::ldexp(s.mant, static_cast<int>(gap));
  };
  const long double pm = shift(p);
  const long double qm = shift(q);
  ScaledReal r{static_cast<long double>(d) * pm -
                   static_cast<long double>(a) * static_cast<long double>(b) * qm,
               e};
  r.normalize();
  return r;
}

using Ops = detail::PivotArith<double>;

ScaledReal magnitude(const ScaledReal& x) { return {std::fabs(x.mant), x.exp2}; }

ScaledReal scaled_by(const ScaledReal& x, long double s) {
  ScaledReal r{x.mant * s, x.exp2};
  r.normalize();
  return r;
}

// x P + y Q for nonnegative x, y, P, Q.
ScaledReal sum_of_products(double x, double y, const ScaledReal& p, const ScaledReal& q) {
  return three_term_step(x, -y, 1.0, p, q);
}

bool not_above(const ScaledReal& x, const ScaledReal& y) {
  if (x.mant == 0.0L) return true;
  if (y.mant == 0.0L) return false;
  if (x.exp2 != y.exp2) return x.exp2 < y.exp2;
  return std::fabs(x.mant) <= std::fabs(y.mant);
}

// Unit roundoff of the double-double pivot arithmetic and of long double,
// each rounded up.
constexpr long double kPivotUnit = 0x1p-100L;
constexpr long double kExtendedUnit = 0x1p-62L;
// A floating result closer to zero than this multiple of its error bound is
// recomputed exactly.
constexpr long double kSignMargin = 8.0L;

/*
 * Same control flow as the plain hybrid, with f carried as mantissa/exponent
 * pairs. Alongside f a first-order bound E_k on |computed f_k - f_k| is
 * propagated:
 *
 *   pivot phase   dc_k = |q_k| (r_{k-1} + u) + u |c_k|,  r_k = dc_k / |c_k|
 *                 E_k  = |f_{k-1}| (dc_k + |c_k| (rho_{k-1} + 2 u'))
 *   three-term    E_k  = |d| E_{k-1} + |ab| E_{k-2} + 4 u' (|d f_{k-1}| + |ab f_{k-2}|)
 *
 * where rho is the relative error of f, u the double-double unit and u' the
 * long double unit. When |f_n| does not clear the bound the sign cannot be
 * trusted, and the determinant is recomputed in exact rational arithmetic.
 */
template <class Sink>
DetResult scaled_hybrid(const TridiagonalMatrix& m, ZeroTest zero, Sink&& sink) {
  const std::size_t n = m.order();
  const auto d = m.diag();
  const auto a = m.super();
  const auto b = m.sub();

  DoubleDouble c(d[0]);
  ScaledReal f_prev = ScaledReal::from(1.0L);
  ScaledReal f = ScaledReal::from(d[0]);
  ScaledReal err_prev;
  ScaledReal err;
  long double pivot_rel = 0.0L;
  long double minor_rel = 0.0L;
  sink(1, f);
  std::size_t idx = 1;
  const DoubleZero is_zero{zero};
  bool vanished = is_zero(c, d[0], 0.0);
  StepCounts steps;

  while (idx <= n - 1 && !vanished) {
    const DoubleDouble quotient = Ops::quotient(a[idx - 1], b[idx - 1], c);
    const DoubleDouble next_c = Ops::pivot(d[idx], quotient);
    // A non-finite pivot hands over to the three-term recurrence.
    if (!std::isfinite(next_c.hi) || !std::isfinite(next_c.lo)) break;
    ++idx;
    c = next_c;
    vanished = is_zero(c, d[idx - 1], quotient.value());

    const long double abs_c = std::fabs(static_cast<long double>(c.hi) + c.lo);
    const long double abs_q = std::fabs(static_cast<long double>(quotient.hi) + quotient.lo);
    const long double dc = abs_q * (pivot_rel + kPivotUnit) + kPivotUnit * abs_c;
    ScaledReal next_err =
        scaled_by(magnitude(f), dc + abs_c * (minor_rel + 2.0L * kExtendedUnit));
    pivot_rel = abs_c > 0.0L ? dc / abs_c : HUGE_VALL;
    minor_rel += pivot_rel + 2.0L * kExtendedUnit;

    ScaledReal next = f.times(c);
    f_prev = f;
    f = next;
    err_prev = err;
    err = next_err;
    sink(idx, f);
    ++steps.pivot_updates;
  }

  DetResult r;
  r.algorithm = Algorithm::Hybrid;
  if (idx < n) r.pivot_break = idx;

  for (std::size_t k = idx + 1; k <= n; ++k) {
    const double dk = d[k - 1];
    const double ab_abs = std::fabs(a[k - 2]) * std::fabs(b[k - 2]);
    ScaledReal next = three_term_step(dk, a[k - 2], b[k - 2], f, f_prev);
    ScaledReal next_err = sum_of_products(std::fabs(dk), ab_abs, err, err_prev);
    const ScaledReal terms = sum_of_products(std::fabs(dk), ab_abs, magnitude(f), magnitude(f_prev));
    next_err = sum_of_products(1.0, 4.0 * static_cast<double>(kExtendedUnit), next_err, terms);
    f_prev = f;
    f = next;
    err_prev = err;
    err = next_err;
    sink(k, f);
    ++steps.three_term_steps;
  }
  r.steps = steps;

  if (err.mant != 0.0L && not_above(magnitude(f), scaled_by(err, kSignMargin))) {
    r.value = signed_log(detail::hybrid(to_rational(m), ExactZero{}).value);
  } else {
    r.value = f.to_signed_log();
  }
  return r;
}

}  // namespace

ZeroTest ZeroTest::absolute(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("zero tolerance must be a finite nonnegative number");
  }
  return tol == 0.0 ? exact() : ZeroTest(Kind::Absolute, tol);
}

ZeroTest ZeroTest::relative(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("zero tolerance must be a finite nonnegative number");
  }
  return tol == 0.0 ? exact() : ZeroTest(Kind::Relative, tol);
}

std::string_view to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::TwoTerm:
      return "two_term";
    case Algorithm::ThreeTerm:
      return "three_term";
    case Algorithm::Hybrid:
      return "hybrid";
    case Algorithm::Detgtri:
      return "detgtri";
  }
  return "unknown";
}

double DetResult::scalar() const {
  if (const auto* v = std::get_if<double>(&value)) return *v;
  return std::get<SignedLogValue>(value).to_scalar();
}

SignedLogValue DetResult::signed_log() const {
  if (const auto* v = std::get_if<SignedLogValue>(&value)) return *v;
  return SignedLogValue::from_scalar(std::get<double>(value));
}

PivotSequence pivot_sequence(const TridiagonalMatrix& m, ZeroTest zero) {
  return detail::pivot_sweep(m, DoubleZero{zero});
}

RationalPivotSequence pivot_sequence(const RationalTridiagonal& m) {
  return detail::pivot_sweep(m, ExactZero{});
}

DetResult det_two_term(const TridiagonalMatrix& m) {
  return plain_result(detail::two_term(m), Algorithm::TwoTerm, "two-term");
}

ExactDetResult det_two_term(const RationalTridiagonal& m) {
  return exact_result(detail::two_term(m), Algorithm::TwoTerm);
}

DetResult det_three_term(const TridiagonalMatrix& m) {
  return plain_result(detail::three_term(m), Algorithm::ThreeTerm, "three-term");
}

ExactDetResult det_three_term(const RationalTridiagonal& m) {
  return exact_result(detail::three_term(m), Algorithm::ThreeTerm);
}

DetResult det_hybrid(const TridiagonalMatrix& m, ZeroTest zero) {
  return plain_result(detail::hybrid(m, DoubleZero{zero}), Algorithm::Hybrid, "hybrid");
}

ExactDetResult det_hybrid(const RationalTridiagonal& m) {
  return exact_result(detail::hybrid(m, ExactZero{}), Algorithm::Hybrid);
}

DetResult det_hybrid_scaled(const TridiagonalMatrix& m, ZeroTest zero) {
  return scaled_hybrid(m, zero, detail::NoSink{});
}

MinorSequence principal_minors(const TridiagonalMatrix& m, ArithmeticMode mode, ZeroTest zero) {
  if (mode == ArithmeticMode::Plain) {
    std::vector<double> f(m.order() + 1, 1.0);
    detail::hybrid(m, DoubleZero{zero}, [&f](std::size_t i, double v) { f[i] = v; });
    for (double v : f) checked(v, "principal minors");
    return MinorSequence::plain(std::move(f));
  }
  std::vector<SignedLogValue> f(m.order() + 1, SignedLogValue(1, 0.0));
  scaled_hybrid(m, zero, [&f](std::size_t i, const ScaledReal& v) { f[i] = v.to_signed_log(); });
  return MinorSequence::scaled(std::move(f));
}

std::vector<Rational> principal_minors(const RationalTridiagonal& m) {
  std::vector<Rational> f(m.order() + 1, Rational(1));
  detail::hybrid(m, ExactZero{}, [&f](std::size_t i, const Rational& v) { f[i] = v; });
  return f;
}

}  // namespace tridet
