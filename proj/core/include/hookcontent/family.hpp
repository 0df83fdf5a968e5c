#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace hookcontent {

/// gl: GL(n) Schur functions at (1, q, …, q^{n−1}).
/// sp: Sp(2n) at x_j = q^{2j−1}.
/// odd_o: O(2n+1) at x_j = q^{2j}.
/// even_o: O(2n) at x_j = q^{2j−1}.
/// so_even: SO(2n), λ with exactly n parts, at x_j = q^{2(j−1)}.
enum class Family { gl, sp, odd_o, even_o, so_even };

inline constexpr Family kAllFamilies[] = {Family::gl, Family::sp, Family::odd_o, Family::even_o,
                                          Family::so_even};

/// CLI spelling: gl, sp, odd-o, even-o, so-even.
std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Group label with its rank parameter, e.g. "Sp(4)" for sp with n = 2.
std::string group_label(Family f, int n);

}  // namespace hookcontent
