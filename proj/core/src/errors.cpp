#include "hookcontent/errors.hpp"

namespace hookcontent {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
    case Errc::not_an_integer: return "NotAnInteger";
    case Errc::cell_outside_diagram: return "CellOutsideDiagram";
    case Errc::too_few_rows: return "TooFewRows";
    case Errc::shape_not_full: return "ShapeNotFull";
    case Errc::unsupported_route: return "UnsupportedRoute";
    case Errc::unsupported_family: return "UnsupportedFamily";
    case Errc::bad_symbol: return "BadSymbol";
    case Errc::bad_json: return "BadJson";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::non_integer_dimension: return "NonIntegerDimension";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace hookcontent
