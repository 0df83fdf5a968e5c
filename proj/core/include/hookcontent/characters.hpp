#pragma once

// Character specialisations at geometric points in q, computed four ways:
//
//   enumeration   generating function over admissible tableaux
//   determinant   Weyl-type ratio of alternants at the specialised point
//   product       hook-content product over the boxes of λ
//   mu_formula    closed form in the shifted exponents μ_i = λ_i + n − i
//
// All routes return exact Laurent polynomials; every ratio is formed as one
// full numerator divided by one full denominator.

#include <optional>
#include <string_view>
#include <vector>

#include "hookcontent/family.hpp"
#include "hookcontent/laurent.hpp"
#include "hookcontent/shapes.hpp"

namespace hookcontent {

enum class Route { enumeration, determinant, product, mu_formula };

std::string_view route_name(Route r) noexcept;
std::optional<Route> parse_route(std::string_view name) noexcept;

/// Routes defined for a family. GL has no determinantal or μ-form route.
std::vector<Route> routes_for(Family family);

struct CharResult {
  Family family;
  Partition shape;
  int n;
  Route route;
  LaurentPoly poly;
  BigInt dimension;  // poly at q = 1
};

// Preconditions shared by every entry point below: n ≥ 1 and n ≥ length(λ)
// (TooFewRows otherwise); so_even additionally needs exactly n parts
// (ShapeNotFull).

/// gl: Σ q^{|T|−|λ|}. sp, even_o: Σ q^{2|T|−r(T)}. odd_o: Σ q^{2|T|}.
/// so_even: positive tableaux weighted at x_j = q^{2(j−1)}.
CharResult char_enumeration(Family family, const Partition& shape, int n);

/// Throws UnsupportedRoute for gl.
CharResult char_determinant(Family family, const Partition& shape, int n);

/// gl: q^{b(λ)} ∏[n+c]/∏[h]. sp: ∏⟨2n+r⟩/∏⟨h⟩. odd_o: ∏⟨2n+1+r'⟩/∏⟨h⟩.
/// even_o: ∏⟨2n+r'⟩/∏⟨h⟩. so_even: the even_o product rescaled by
/// ∏_{i<n}⟨2i⟩/⟨i⟩ · ∏⟨μ_i⟩/⟨2μ_i⟩.
CharResult char_product(Family family, const Partition& shape, int n);

/// Throws UnsupportedRoute for gl.
CharResult char_mu_formula(Family family, const Partition& shape, int n);

CharResult compute_char(Family family, Route route, const Partition& shape, int n);

/// ∏ over boxes of ⟨h(i,j)⟩.
LaurentPoly hook_product(const Partition& shape, int n);
/// ∏⟨μ_i⟩! / ∏_{i<j}⟨μ_i − μ_j⟩.
LaurentPoly hook_product_mu(const Partition& shape, int n);

/// ∏ over boxes of ⟨2n + shift + content⟩ with the family's content
/// function: sp uses r_λ, odd_o uses r'_λ with shift 1, even_o r'_λ.
LaurentPoly content_product(Family family, const Partition& shape, int n);
/// The μ-form right-hand side of the matching product identity.
LaurentPoly content_product_mu(Family family, const Partition& shape, int n);

/// SO(2n) character at (1, q², q⁴, …, q^{2n−2}) for λ with exactly n parts:
/// ∏_{i<j}⟨μ_i−μ_j⟩⟨μ_i+μ_j⟩ / ∏_{i<n}⟨2i−1⟩!⟨i⟩.
LaurentPoly so_char(const Partition& shape, int n);

/// Half the O(2n) dimension, for λ with exactly n parts.
BigInt d_so(const Partition& shape, int n);

/// Closed-form dimension ∏ (factor)/h over the boxes, evaluated as an exact
/// rational; NonIntegerDimension if the result is not an integer.
BigInt dimension(Family family, const Partition& shape, int n);

/// Tally of classify_even over all even orthogonal tableaux.
struct EvenSplit {
  std::size_t positive = 0;  // includes tableaux that are both
  std::size_t negative = 0;  // includes tableaux that are both
  std::size_t both = 0;
  std::size_t neither = 0;
  std::size_t total = 0;
};

EvenSplit even_split(const Partition& shape, int n);

/// Generating function of the positive (or negative) tableaux at
/// x_j = q^{2(j−1)}.
LaurentPoly so_enumeration(const Partition& shape, int n, bool positive);

}  // namespace hookcontent
