#pragma once

#include <gmpxx.h>

#include <string>

#include "tridet/core.hpp"

namespace tridet {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalTridiagonal = BasicTridiagonal<Rational>;

/// Converts every entry through its exact binary value (no rounding).
RationalTridiagonal to_rational(const TridiagonalMatrix& m);
SquareGrid<Rational> to_rational(const SquareGrid<double>& g);

/// Sign and natural log of |q|, accurate for magnitudes far outside double range.
SignedLogValue signed_log(const Rational& q);
SignedLogValue signed_log(const Integer& z);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace tridet
