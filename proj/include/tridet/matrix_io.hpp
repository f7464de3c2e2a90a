#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tridet/core.hpp"
#include "tridet/factorization.hpp"

namespace tridet {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * Matrix text format:
 *
 *   line 1  n
 *   line 2  d_1 .. d_n
 *   line 3  a_1 .. a_{n-1}
 *   line 4  b_1 .. b_{n-1}
 *
 * Values are whitespace separated decimal floating-point literals. Lines 3
 * and 4 may be blank or absent when n = 1. Throws ParseError on malformed
 * input, including non-finite values.
 */
TridiagonalMatrix parse_matrix(std::string_view text);
TridiagonalMatrix read_matrix(std::istream& in);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_scalar(double x);

std::string format_matrix(const TridiagonalMatrix& m);

/// "convention <name>", then "L" and "U" each followed by the factor in the
/// matrix text format.
std::string format_lu(const LUFactors& f);

}  // namespace tridet
