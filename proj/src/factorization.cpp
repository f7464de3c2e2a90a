#include "tridet/factorization.hpp"

#include <cmath>

#include "compensated.hpp"
#include "tridet/recurrences.hpp"

namespace tridet {

std::string_view to_string(LuConvention c) {
  return c == LuConvention::Doolittle ? "doolittle" : "crout";
}

TridiagonalMatrix LUFactors::lower() const {
  return TridiagonalMatrix(l_diag, std::vector<double>(l_sub.size(), 0.0), l_sub);
}

TridiagonalMatrix LUFactors::upper() const {
  return TridiagonalMatrix(u_diag, u_super, std::vector<double>(u_super.size(), 0.0));
}

LUFactors lu_factorize(const TridiagonalMatrix& m, LuConvention convention) {
  const std::size_t n = m.order();
  PivotSequence ps = pivot_sequence(m);
  if (ps.break_index) {
    throw ZeroPivotError(*ps.break_index, "LU factorization without pivoting does not exist");
  }
  for (double c : ps.c) {
    if (!std::isfinite(c)) throw OverflowError("pivot overflowed during LU factorization");
  }
  const auto a = m.super();
  const auto b = m.sub();
  const std::vector<double> ones(n, 1.0);

  LUFactors f;
  f.convention = convention;
  if (convention == LuConvention::Doolittle) {
    f.l_diag = ones;
    f.u_diag = ps.c;
    f.u_super.assign(a.begin(), a.end());
    f.l_sub.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) f.l_sub[i] = b[i] / ps.c[i];
  } else {
    f.u_diag = ones;
    f.l_diag = ps.c;
    f.l_sub.assign(b.begin(), b.end());
    f.u_super.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) f.u_super[i] = a[i] / ps.c[i];
  }
  return f;
}

TridiagonalMatrix multiply(const LUFactors& f) {
  const std::size_t n = f.order();
  std::vector<double> d(n), a(n - 1), b(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = f.l_diag[i] * f.u_diag[i];
    if (i > 0) d[i] += f.l_sub[i - 1] * f.u_super[i - 1];
    if (i + 1 < n) {
      a[i] = f.l_diag[i] * f.u_super[i];
      b[i] = f.l_sub[i] * f.u_diag[i];
    }
  }
  return TridiagonalMatrix(std::move(d), std::move(a), std::move(b));
}

namespace {

PdVerdict exact_pd_verdict(const TridiagonalMatrix& m) {
  const auto q = to_rational(m);
  PdVerdict v;
  Rational c = q.diag()[0];
  for (std::size_t i = 0;; ++i) {
    v.pivots.push_back(c.get_d());
    if (sgn(c) <= 0) {
      v.failing_index = i + 1;
      return v;
    }
    if (i + 1 == q.order()) break;
    c = q.diag()[i + 1] - q.super()[i] * q.sub()[i] / c;
  }
  v.positive_definite = true;
  return v;
}

}  // namespace

PdVerdict is_positive_definite(const TridiagonalMatrix& m) {
  if (!m.is_symmetric()) {
    throw NotSymmetricError("positive-definiteness test needs a symmetric matrix (a_i == b_i)");
  }
  const auto d = m.diag();
  const auto a = m.super();
  const auto b = m.sub();

  PdVerdict v;
  v.pivots.reserve(m.order());
  // Pivots carried in double-double with a running bound on their relative
  // error. A pivot whose sign the bound cannot certify is settled exactly.
  constexpr double kUnit = 0x1p-100;
  detail::DoubleDouble c(d[0]);
  double rel = 0.0;
  for (std::size_t i = 0;; ++i) {
    if (!(rel < 0.125)) return exact_pd_verdict(m);
    v.pivots.push_back(c.value());
    if (!(c.hi > 0.0)) {
      v.failing_index = i + 1;
      return v;
    }
    if (i + 1 == m.order()) break;
    const detail::DoubleDouble q = detail::DoubleDouble(detail::two_prod(a[i], b[i])) / c;
    c = detail::minus(d[i + 1], q);
    const double abs_c = std::fabs(c.hi);
    const double dc = std::fabs(q.hi) * (rel + 2 * kUnit) + kUnit * abs_c;
    rel = abs_c > 0.0 ? dc / abs_c : HUGE_VAL;
  }
  v.positive_definite = true;
  return v;
}

}  // namespace tridet
