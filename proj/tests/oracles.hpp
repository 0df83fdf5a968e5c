#pragma once

// Slow, independent reference implementations used only by the tests. None
// of these share code paths with the library routine they check.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hookcontent/determinant.hpp"
#include "hookcontent/laurent.hpp"
#include "hookcontent/shapes.hpp"
#include "hookcontent/tableaux.hpp"

namespace oracle {

using hookcontent::BigInt;
using hookcontent::Cell;
using hookcontent::Family;
using hookcontent::LaurentPoly;
using hookcontent::Partition;
using Rational = boost::multiprecision::cpp_rational;
using SparsePoly = std::map<int, BigInt>;

inline std::vector<std::vector<bool>> grid(const Partition& p) {
  std::vector<std::vector<bool>> g;
  for (int part : p.parts()) g.emplace_back(static_cast<std::size_t>(part), true);
  return g;
}

inline std::vector<int> conjugate_parts(const Partition& p) {
  std::vector<int> out;
  for (const auto& row : grid(p)) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (out.size() <= j) out.push_back(0);
      ++out[j];
    }
  }
  return out;
}

/// Counts the boxes in the hook directly: the box, everything to its right,
/// everything below.
inline int hook_count(const Partition& p, Cell c) {
  auto g = grid(p);
  int count = 0;
  for (std::size_t j = static_cast<std::size_t>(c.col - 1); j < g[static_cast<std::size_t>(c.row - 1)].size(); ++j) ++count;
  for (std::size_t i = static_cast<std::size_t>(c.row); i < g.size(); ++i) {
    if (g[i].size() >= static_cast<std::size_t>(c.col)) ++count;
  }
  return count;
}

inline SparsePoly sparse(const LaurentPoly& p) {
  SparsePoly m;
  for (const auto& [e, c] : p.terms()) m[e] = c;
  return m;
}

inline SparsePoly sparse_mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline SparsePoly sparse_add(SparsePoly a, const SparsePoly& b, int sign = 1) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

inline LaurentPoly from_sparse(const SparsePoly& m) {
  std::vector<LaurentPoly::Term> terms(m.begin(), m.end());
  return LaurentPoly(terms);
}

/// Value at an integer point, exact.
inline Rational evaluate(const LaurentPoly& p, int q) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = Rational(c);
    Rational base = e >= 0 ? Rational(q) : Rational(1) / q;
    for (int k = 0; k < std::abs(e); ++k) term *= base;
    sum += term;
  }
  return sum;
}

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 5, int exp_range = 20, int coeff_range = 1000) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-exp_range, exp_range);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::vector<LaurentPoly::Term> terms;
  for (int k = nterms(rng); k > 0; --k) terms.emplace_back(exp(rng), BigInt(coeff(rng)));
  return LaurentPoly(terms);
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng, int max_terms = 5, int exp_range = 20) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_terms, exp_range);
    if (!p.is_zero()) return p;
  }
}

/// Leibniz expansion over all permutations.
inline LaurentPoly leibniz_det(const hookcontent::PolyMatrix& m) {
  const int n = m.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  SparsePoly total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
      }
    }
    SparsePoly term{{0, BigInt(1)}};
    for (int i = 0; i < n; ++i) term = sparse_mul(term, sparse(m(i, perm[static_cast<std::size_t>(i)])));
    total = sparse_add(total, term, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return from_sparse(total);
}

/// Every filling of [λ] by the family alphabet, kept when admissible.
/// Rendered strings, in the order the fillings were generated (which is
/// lexicographic in the row-major rank sequence).
inline std::vector<std::string> brute_force_tableaux(Family family, const Partition& shape, int n) {
  const auto symbols = hookcontent::alphabet(family, n);
  const std::size_t boxes = static_cast<std::size_t>(shape.size());
  std::vector<std::size_t> digits(boxes, 0);
  std::vector<std::string> out;
  for (;;) {
    std::vector<hookcontent::Symbol> entries;
    for (std::size_t d : digits) entries.push_back(symbols[d]);
    hookcontent::Tableau t(shape, family, n, entries);
    if (hookcontent::is_admissible(t)) out.push_back(t.render());
    std::size_t pos = boxes;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < symbols.size()) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (boxes == 0) return out;
  }
}

// Weyl dimension formulas in the root-system form ∏ <λ+ρ, α> / <ρ, α>,
// written with doubled coordinates so that half-integers never occur.

inline BigInt weyl_gl(const Partition& p, int n) {
  Rational r = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) r *= Rational(p.part(i) - p.part(j) + j - i, j - i);
  }
  return boost::multiprecision::numerator(r);
}

/// Type B or C or D product over the positive roots e_i ± e_j (and 2e_i or
/// e_i for C and B). `l` and `m` are λ+ρ and ρ in doubled coordinates.
inline Rational classical_product(const std::vector<int>& l, const std::vector<int>& m, bool short_roots) {
  Rational r = 1;
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      r *= Rational(l[i] - l[j], m[i] - m[j]);
      r *= Rational(l[i] + l[j], m[i] + m[j]);
    }
    if (short_roots) r *= Rational(l[i], m[i]);
  }
  return r;
}

inline BigInt integral(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1) throw std::logic_error("oracle: non-integral dimension");
  return boost::multiprecision::numerator(r);
}

/// Sp(2n): ρ_i = n − i + 1.
inline BigInt weyl_sp(const Partition& p, int n) {
  std::vector<int> l, m;
  for (int i = 1; i <= n; ++i) {
    l.push_back(2 * (p.part(i) + n - i + 1));
    m.push_back(2 * (n - i + 1));
  }
  return integral(classical_product(l, m, true));
}

/// SO(2n+1): ρ_i = n − i + 1/2. The O(2n+1) module restricts irreducibly.
inline BigInt weyl_odd_o(const Partition& p, int n) {
  std::vector<int> l, m;
  for (int i = 1; i <= n; ++i) {
    l.push_back(2 * (p.part(i) + n - i) + 1);
    m.push_back(2 * (n - i) + 1);
  }
  return integral(classical_product(l, m, true));
}

/// SO(2n): ρ_i = n − i.
inline BigInt weyl_so_even(const Partition& p, int n) {
  std::vector<int> l, m;
  for (int i = 1; i <= n; ++i) {
    l.push_back(2 * (p.part(i) + n - i));
    m.push_back(2 * (n - i));
  }
  return integral(classical_product(l, m, false));
}

/// O(2n): λ_n = 0 restricts irreducibly, otherwise it splits into λ⁺ and λ⁻
/// of equal dimension.
inline BigInt weyl_even_o(const Partition& p, int n) {
  const BigInt d = weyl_so_even(p, n);
  return p.length() == n && n > 0 ? 2 * d : d;
}

}  // namespace oracle
