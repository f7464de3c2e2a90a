#include "tridet/symbolic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tridet {

// --- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::z() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Rational> out(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator-(Polynomial x) {
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& x, const Polynomial& y) {
  if (y.is_zero()) throw std::domain_error("polynomial division by zero");
  if (x.degree() < y.degree()) return {Polynomial(), x};

  std::vector<Rational> rem = x.coeffs_;
  std::vector<Rational> quot(x.coeffs_.size() - y.coeffs_.size() + 1, Rational(0));
  const Rational& lead = y.coeffs_.back();
  const std::size_t dy = y.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + dy] / lead;
    quot[k] = factor;
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j <= dy; ++j) rem[k + j] -= factor * y.coeffs_[j];
  }
  rem.resize(dy);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial x, Polynomial y) {
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) x *= Rational(1) / x.leading();
  return x;
}

Rational poly_eval_at_zero(const Polynomial& p) {
  return p.is_zero() ? Rational(0) : p.coeffs().front();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    const bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str();
    if (k > 0) os << (unit ? "" : "*") << "z";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

// --- RationalFunction -------------------------------------------------------

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den_.degree() > 0 && num_.degree() >= 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (den_.leading() != 1) {
    const Rational scale = Rational(1) / den_.leading();
    num_ *= scale;
    den_ *= scale;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  reduce();
  return *this;
}

std::string to_string(const RationalFunction& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

RationalFunction ratfn_arith(const RationalFunction& x, const RationalFunction& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return x + y;
    case ArithOp::Sub:
      return x - y;
    case ArithOp::Mul:
      return x * y;
    case ArithOp::Div:
      return x / y;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

// --- DETGTRI ----------------------------------------------------------------

DetgtriResult det_detgtri(const RationalTridiagonal& m,
                          const std::function<void(const DetgtriStep&)>& observer) {
  const std::size_t n = m.order();
  const auto d = m.diag();
  const auto a = m.super();
  const auto b = m.sub();

  std::vector<RationalFunction> pivots;
  pivots.reserve(n);
  for (const auto& x : d) pivots.emplace_back(x);

  const RationalFunction z(Polynomial::z());
  std::size_t substitutions = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (pivots[k - 1].is_zero()) {
      pivots[k - 1] = z;
      ++substitutions;
    }
    const Rational coupling = a[k - 1] * b[k - 1];
    if (sgn(coupling) != 0) pivots[k] -= RationalFunction(coupling) / pivots[k - 1];
    if (observer) observer(DetgtriStep{k + 1, pivots[k], substitutions});
  }

  RationalFunction product(Rational(1));
  for (const auto& p : pivots) product *= p;
  if (!product.is_polynomial()) {
    throw std::logic_error("DETGTRI: pivot product did not reduce to a polynomial: " +
                           to_string(product));
  }
  DetgtriResult out;
  out.value = poly_eval_at_zero(product.num());
  out.determinant_polynomial = product.num();
  out.substitutions = substitutions;
  return out;
}

DetgtriResult det_detgtri(const TridiagonalMatrix& m) { return det_detgtri(to_rational(m)); }

}  // namespace tridet
