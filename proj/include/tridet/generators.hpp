#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "tridet/core.hpp"
#include "tridet/exact.hpp"

namespace tridet {

/*
 * Example families.
 *
 *   Ex31  fixed 4x4: d = (1,1,2,-1), a = (1,-1,1), b = (1,1,-3)
 *   Ex32  d_i = 2, a_i = b_i = -1                  det = n + 1
 *   Ex33  all three diagonals equal to 1           det periodic mod 6
 *   Ex34  d_i = 1, a_i = i, b_i = n - i            det = 0 for even n
 *   Ex35  d = (1,2,...,2,1), a_i = 1, b_i = 2      c_2 = 0 for n >= 3
 */
enum class Family { Ex31, Ex32, Ex33, Ex34, Ex35 };

inline constexpr std::array<Family, 5> kAllFamilies = {Family::Ex31, Family::Ex32, Family::Ex33,
                                                       Family::Ex34, Family::Ex35};

std::string_view to_string(Family f);
/// Accepts "ex31".."ex35" (case-insensitive).
std::optional<Family> parse_family(std::string_view name);

/// Throws std::invalid_argument for unsupported n (Ex31 needs n = 4,
/// Ex34/Ex35 need n >= 2, the rest n >= 1).
TridiagonalMatrix gen_example(Family family, std::size_t n);

bool has_closed_form(Family family) noexcept;

/// Exact determinant from the family's closed form (Ex32, Ex33, Ex34 only).
Integer closed_form_det(Family family, std::size_t n);

}  // namespace tridet
