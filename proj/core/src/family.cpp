#include "hookcontent/family.hpp"

namespace hookcontent {

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sp: return "sp";
    case Family::odd_o: return "odd-o";
    case Family::even_o: return "even-o";
    case Family::so_even: return "so-even";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string group_label(Family f, int n) {
  const std::string dim = std::to_string(n);
  switch (f) {
    case Family::gl: return "GL(" + dim + ")";
    case Family::sp: return "Sp(" + std::to_string(2 * n) + ")";
    case Family::odd_o: return "O(" + std::to_string(2 * n + 1) + ")";
    case Family::even_o: return "O(" + std::to_string(2 * n) + ")";
    case Family::so_even: return "SO(" + std::to_string(2 * n) + ")";
  }
  return dim;
}

}  // namespace hookcontent
