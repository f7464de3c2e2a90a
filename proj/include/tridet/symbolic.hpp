#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tridet/core.hpp"
#include "tridet/exact.hpp"

namespace tridet {

/*
 * Dense univariate polynomial in z with exact rational coefficients.
 * coeffs()[k] multiplies z^k; trailing zeros are always stripped, so the zero
 * polynomial has no coefficients and degree() == -1.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  /// The monomial z.
  static Polynomial z();

  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(Polynomial x);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division: x = q y + r with deg r < deg y. Throws on y == 0.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& x, const Polynomial& y);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial x, Polynomial y);

/// The constant coefficient, i.e. p(0).
Rational poly_eval_at_zero(const Polynomial& p);

std::string to_string(const Polynomial& p);

/*
 * num/den in lowest terms with a monic denominator. Every constructor and
 * operator re-establishes that form, so equal functions compare equal.
 */
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& constant) : RationalFunction(Polynomial(constant)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the denominator is the constant 1.
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  long degree_bound() const noexcept { return std::max(num_.degree(), den_.degree()); }

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void reduce();

  Polynomial num_;
  Polynomial den_;
};

std::string to_string(const RationalFunction& r);

enum class ArithOp { Add, Sub, Mul, Div };

/// Division by the zero function throws std::domain_error.
RationalFunction ratfn_arith(const RationalFunction& x, const RationalFunction& y, ArithOp op);

/// One iteration of the symbolic pivot loop, reported to an observer.
struct DetgtriStep {
  std::size_t k;                   // 1-based index of the updated working pivot
  const RationalFunction& pivot;   // working pivot d_k after the update
  std::size_t substitutions;       // z-substitutions performed so far
};

struct DetgtriResult {
  Rational value;
  Polynomial determinant_polynomial;  // P(z)
  std::size_t substitutions = 0;

  double scalar() const { return value.get_d(); }
};

/*
 * Symbolic-pivot determinant. Working pivots are rational functions in z;
 * a working pivot that reduces to the zero function is replaced by z before
 * it is used as a divisor. The product of the final pivots is P(z), a
 * polynomial, and det = P(0). Exact for any input.
 */
DetgtriResult det_detgtri(const RationalTridiagonal& m,
                          const std::function<void(const DetgtriStep&)>& observer = {});
/// Converts the entries exactly before running.
DetgtriResult det_detgtri(const TridiagonalMatrix& m);

}  // namespace tridet
