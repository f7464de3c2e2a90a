#include "tridet/core.hpp"

#include <charconv>
#include <stdexcept>

namespace tridet {

TridiagonalMatrix make_matrix(std::vector<double> d, std::vector<double> a, std::vector<double> b) {
  return TridiagonalMatrix(std::move(d), std::move(a), std::move(b));
}

SignedLogValue::SignedLogValue(int sign, double logmag) : sign_(sign), logmag_(logmag) {
  if (sign < -1 || sign > 1) {
    throw std::invalid_argument("sign must be -1, 0 or +1");
  }
  if (sign == 0) {
    logmag_ = -std::numeric_limits<double>::infinity();
  } else if (std::isnan(logmag)) {
    throw std::invalid_argument("log-magnitude of a nonzero value must not be NaN");
  }
}

SignedLogValue SignedLogValue::from_scalar(double x) {
  if (x == 0.0) return zero();
  if (!std::isfinite(x)) {
    throw NonFiniteError("cannot encode a non-finite scalar");
  }
  return SignedLogValue(x < 0 ? -1 : 1, std::log(std::fabs(x)));
}

double SignedLogValue::to_scalar() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(logmag_);
}

SignedLogValue operator*(const SignedLogValue& x, const SignedLogValue& y) {
  if (x.sign_ == 0 || y.sign_ == 0) return SignedLogValue::zero();
  return SignedLogValue(x.sign_ * y.sign_, x.logmag_ + y.logmag_);
}

bool operator==(const SignedLogValue& x, const SignedLogValue& y) {
  if (x.sign_ != y.sign_) return false;
  return x.sign_ == 0 || x.logmag_ == y.logmag_;
}

std::string to_string(const SignedLogValue& v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v.logmag());
  return std::to_string(v.sign()) + " " + std::string(buf, res.ptr);
}

MinorSequence MinorSequence::plain(std::vector<double> f) {
  if (f.empty() || f.front() != 1.0) {
    throw std::invalid_argument("minor sequence must start with f_0 = 1");
  }
  for (double x : f) {
    if (!std::isfinite(x)) throw OverflowError("plain minor sequence holds a non-finite value");
  }
  MinorSequence s;
  s.mode_ = ArithmeticMode::Plain;
  s.plain_ = std::move(f);
  return s;
}

MinorSequence MinorSequence::scaled(std::vector<SignedLogValue> f) {
  if (f.empty() || !(f.front() == SignedLogValue(1, 0.0))) {
    throw std::invalid_argument("minor sequence must start with f_0 = 1");
  }
  MinorSequence s;
  s.mode_ = ArithmeticMode::Scaled;
  s.scaled_ = std::move(f);
  return s;
}

std::size_t MinorSequence::order() const noexcept {
  return (mode_ == ArithmeticMode::Plain ? plain_.size() : scaled_.size()) - 1;
}

double MinorSequence::value(std::size_t i) const {
  return mode_ == ArithmeticMode::Plain ? plain_.at(i) : scaled_.at(i).to_scalar();
}

SignedLogValue MinorSequence::signed_log(std::size_t i) const {
  return mode_ == ArithmeticMode::Plain ? SignedLogValue::from_scalar(plain_.at(i))
                                        : scaled_.at(i);
}

}  // namespace tridet
