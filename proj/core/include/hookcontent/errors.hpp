#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hookcontent {

enum class Errc {
  not_weakly_decreasing,
  not_an_integer,
  cell_outside_diagram,
  too_few_rows,
  shape_not_full,
  unsupported_route,
  unsupported_family,
  bad_symbol,
  bad_json,
  // The remaining codes signal an implementation bug, never bad input.
  inexact_division,
  non_integer_dimension,
};

std::string_view errc_name(Errc code) noexcept;

/// True for error codes that indicate a broken formula rather than bad input.
constexpr bool is_internal(Errc code) noexcept {
  return code == Errc::inexact_division || code == Errc::non_integer_dimension;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hookcontent
