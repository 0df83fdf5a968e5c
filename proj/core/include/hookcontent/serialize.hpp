#pragma once

// Wire formats: JSON for polynomials and character results, CSV rows, and
// LaTeX rendering of polynomials.

#include <nlohmann/json.hpp>
#include <string>

#include "hookcontent/characters.hpp"
#include "hookcontent/laurent.hpp"

namespace hookcontent {

/// [[exponent, "coefficient"], ...], exponent ascending.
nlohmann::json poly_to_json(const LaurentPoly& p);

/// Accepts exactly the form produced by poly_to_json: strictly ascending
/// exponents, nonzero decimal-string coefficients. Throws BadJson.
LaurentPoly poly_from_json(const nlohmann::json& j);

/// {"family", "shape", "n", "route", "poly", "dimension"}.
nlohmann::json char_result_to_json(const CharResult& r);
CharResult char_result_from_json(const nlohmann::json& j);

/// Terms ascending, q^{e} exponents, e.g. "q^{-1}+q".
std::string emit_latex(const LaurentPoly& p);

/// family,shape,n,route,dimension,poly
std::string csv_header();
std::string csv_row(const CharResult& r);

}  // namespace hookcontent
