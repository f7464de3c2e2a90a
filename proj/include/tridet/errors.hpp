#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tridet {

/// Input vectors have inconsistent lengths for a tridiagonal matrix.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An entry is NaN or infinite.
class NonFiniteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Symmetric input was required but a_i != b_i for some i.
class NotSymmetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plain floating-point evaluation produced a non-finite value.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A pivot c_k vanished where the requested method needs to divide by it.
/// The index is 1-based, matching c_1..c_n.
class ZeroPivotError : public std::domain_error {
 public:
  ZeroPivotError(std::size_t index, const std::string& what)
      : std::domain_error(what + " (zero pivot at index " + std::to_string(index) + ")"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace tridet
