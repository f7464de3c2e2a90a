#include "tridet/exact.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace tridet {
namespace {

// log|z| for z != 0 via z = m * 2^e with 0.5 <= |m| < 1.
double log_abs(const mpz_class& z) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::vector<Rational> convert(std::span<const double> v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (double x : v) out.emplace_back(x);
  return out;
}

}  // namespace

RationalTridiagonal to_rational(const TridiagonalMatrix& m) {
  return RationalTridiagonal(convert(m.diag()), convert(m.super()), convert(m.sub()));
}

SquareGrid<Rational> to_rational(const SquareGrid<double>& g) {
  SquareGrid<Rational> out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) out(i, j) = Rational(g(i, j));
  }
  return out;
}

SignedLogValue signed_log(const Rational& q) {
  const int s = sgn(q);
  if (s == 0) return SignedLogValue::zero();
  return SignedLogValue(s, log_abs(q.get_num()) - log_abs(q.get_den()));
}

SignedLogValue signed_log(const Integer& z) {
  const int s = sgn(z);
  if (s == 0) return SignedLogValue::zero();
  return SignedLogValue(s, log_abs(z));
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace tridet
