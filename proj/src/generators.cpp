#include "tridet/generators.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridet {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Ex31:
      return "ex31";
    case Family::Ex32:
      return "ex32";
    case Family::Ex33:
      return "ex33";
    case Family::Ex34:
      return "ex34";
    case Family::Ex35:
      return "ex35";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string lower(name);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (Family f : kAllFamilies) {
    if (lower == to_string(f)) return f;
  }
  return std::nullopt;
}

TridiagonalMatrix gen_example(Family family, std::size_t n) {
  const auto unsupported = [&](const char* need) {
    return std::invalid_argument(std::string(to_string(family)) + " needs " + need +
                                 " (got n = " + std::to_string(n) + ")");
  };
  if (n == 0) throw unsupported("n >= 1");

  switch (family) {
    case Family::Ex31:
      if (n != 4) throw unsupported("n = 4");
      return TridiagonalMatrix({1, 1, 2, -1}, {1, -1, 1}, {1, 1, -3});
    case Family::Ex32:
      return TridiagonalMatrix(std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0),
                               std::vector<double>(n - 1, -1.0));
    case Family::Ex33:
      return TridiagonalMatrix(std::vector<double>(n, 1.0), std::vector<double>(n - 1, 1.0),
                               std::vector<double>(n - 1, 1.0));
    case Family::Ex34: {
      if (n < 2) throw unsupported("n >= 2");
      std::vector<double> a(n - 1), b(n - 1);
      for (std::size_t i = 1; i < n; ++i) {
        a[i - 1] = static_cast<double>(i);
        b[i - 1] = static_cast<double>(n - i);
      }
      return TridiagonalMatrix(std::vector<double>(n, 1.0), std::move(a), std::move(b));
    }
    case Family::Ex35: {
      if (n < 2) throw unsupported("n >= 2");
      std::vector<double> d(n, 2.0);
      d.front() = 1.0;
      d.back() = 1.0;
      return TridiagonalMatrix(std::move(d), std::vector<double>(n - 1, 1.0),
                               std::vector<double>(n - 1, 2.0));
    }
  }
  throw std::invalid_argument("unknown family");
}

bool has_closed_form(Family family) noexcept {
  return family == Family::Ex32 || family == Family::Ex33 || family == Family::Ex34;
}

Integer closed_form_det(Family family, std::size_t n) {
  if (n == 0) throw std::invalid_argument("closed form needs n >= 1");
  switch (family) {
    case Family::Ex32:
      return Integer(static_cast<unsigned long>(n)) + 1;
    case Family::Ex33:
      switch (n % 6) {
        case 0:
        case 1:
          return 1;
        case 2:
        case 5:
          return 0;
        default:
          return -1;
      }
    case Family::Ex34: {
      if (n < 2) throw std::invalid_argument("ex34 needs n >= 2");
      if (n % 2 == 0) return 0;
      // (-1)^((n-1)/2) n! / 2^(n-1) * C(n-1, (n-1)/2)
      const unsigned long half = (n - 1) / 2;
      Integer fact, binom;
      mpz_fac_ui(fact.get_mpz_t(), n);
      mpz_bin_uiui(binom.get_mpz_t(), n - 1, half);
      Integer num = fact * binom;
      Integer pow2;
      mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n - 1);
      if (!mpz_divisible_p(num.get_mpz_t(), pow2.get_mpz_t())) {
        throw std::logic_error("ex34 closed form is not an integer");
      }
      Integer out = num / pow2;
      return half % 2 == 0 ? out : Integer(-out);
    }
    case Family::Ex31:
    case Family::Ex35:
      break;
  }
  throw std::invalid_argument(std::string(to_string(family)) + " has no closed form");
}

}  // namespace tridet
