#include "hookcontent/characters.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>

#include "hookcontent/determinant.hpp"
#include "hookcontent/errors.hpp"
#include "hookcontent/tableaux.hpp"

namespace hookcontent {

std::string_view route_name(Route r) noexcept {
  switch (r) {
    case Route::enumeration: return "enumeration";
    case Route::determinant: return "determinant";
    case Route::product: return "product";
    case Route::mu_formula: return "mu";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view name) noexcept {
  for (Route r : {Route::enumeration, Route::determinant, Route::product, Route::mu_formula}) {
    if (route_name(r) == name) return r;
  }
  return std::nullopt;
}

std::vector<Route> routes_for(Family family) {
  if (family == Family::gl) return {Route::enumeration, Route::product};
  return {Route::enumeration, Route::determinant, Route::product, Route::mu_formula};
}

namespace {

void require_rows(Family family, const Partition& shape, int n) {
  if (n < 1 || n < shape.length()) {
    throw Error(Errc::too_few_rows, "n=" + std::to_string(n) + " for shape [" + shape.to_string() +
                                        "] with " + std::to_string(shape.length()) + " parts");
  }
  if (family == Family::so_even && shape.length() != n) {
    throw Error(Errc::shape_not_full, "so-even needs exactly n=" + std::to_string(n) +
                                          " parts, shape [" + shape.to_string() + "] has " +
                                          std::to_string(shape.length()));
  }
}

CharResult make_result(Family family, const Partition& shape, int n, Route route, LaurentPoly poly) {
  BigInt dim = poly.eval_at_one();
  return CharResult{family, shape, n, route, std::move(poly), std::move(dim)};
}

/// Accumulates q^e counts without materialising intermediate polynomials.
class ExponentTally {
 public:
  void add(int exponent) { ++counts_[exponent]; }
  LaurentPoly poly() const {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(counts_.size());
    for (const auto& [e, c] : counts_) terms.emplace_back(e, BigInt(c));
    return LaurentPoly(terms);
  }

 private:
  std::map<int, unsigned long long> counts_;
};

LaurentPoly monomial_sum(int e) { return LaurentPoly{{e, 1}, {-e, 1}}; }
LaurentPoly monomial_diff(int e) { return LaurentPoly{{e, 1}, {-e, -1}}; }

int so_weight_exponent(const Stats& s) {
  int e = 0;
  for (std::size_t i = 0; i < s.weight.size(); ++i) e += 2 * static_cast<int>(i) * s.weight[i];
  return e;
}

/// Ratio of the two alternants for the given exponent matrix e(i,j), built
/// at λ and at the empty shape.
template <class Entry>
LaurentPoly alternant_ratio(const MuVector& mu, const MuVector& mu_empty, Entry entry,
                            const LaurentPoly& scale) {
  const int n = mu.n();
  PolyMatrix num(n), den(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      num(i - 1, j - 1) = entry(mu[i], j);
      den(i - 1, j - 1) = entry(mu_empty[i], j);
    }
  }
  return exact_div(scale * determinant(num), determinant(den));
}

}  // namespace

CharResult char_enumeration(Family family, const Partition& shape, int n) {
  require_rows(family, shape, n);
  if (family == Family::so_even) {
    return make_result(family, shape, n, Route::enumeration, so_enumeration(shape, n, true));
  }
  ExponentTally tally;
  for_each_tableau(family, shape, n, [&](const Tableau& t) {
    const Stats s = stats(t);
    switch (family) {
      case Family::gl: tally.add(s.entry_sum - shape.size()); break;
      case Family::sp:
      case Family::even_o: tally.add(2 * s.entry_sum - s.r); break;
      case Family::odd_o: tally.add(2 * s.entry_sum); break;
      case Family::so_even: break;
    }
  });
  return make_result(family, shape, n, Route::enumeration, tally.poly());
}

CharResult char_determinant(Family family, const Partition& shape, int n) {
  require_rows(family, shape, n);
  const MuVector mu(shape, n);
  const MuVector mu_empty(Partition{}, n);
  LaurentPoly poly;
  switch (family) {
    case Family::gl:
      throw Error(Errc::unsupported_route, "gl has no determinantal route");
    case Family::sp:
      poly = alternant_ratio(mu, mu_empty, [](int m, int j) { return monomial_diff((2 * j - 1) * (m + 1)); }, 1);
      break;
    case Family::odd_o:
      poly = alternant_ratio(mu, mu_empty, [](int m, int j) { return monomial_diff(j * (2 * m + 1)); }, 1);
      break;
    case Family::even_o: {
      const LaurentPoly scale = shape.length() == n ? 2 : 1;
      poly = alternant_ratio(mu, mu_empty, [](int m, int j) { return monomial_sum((2 * j - 1) * m); }, scale);
      break;
    }
    case Family::so_even:
      // The antisymmetric alternant vanishes at x_1 = 1.
      poly = alternant_ratio(mu, mu_empty, [](int m, int j) { return monomial_sum(2 * (j - 1) * m); }, 1);
      break;
  }
  return make_result(family, shape, n, Route::determinant, std::move(poly));
}

LaurentPoly hook_product(const Partition& shape, int n) {
  require_rows(Family::sp, shape, n);
  std::vector<LaurentPoly> factors;
  for (const Cell c : shape.cells()) factors.push_back(angle_bracket(hook_length(shape, c)));
  return product(std::move(factors));
}

LaurentPoly hook_product_mu(const Partition& shape, int n) {
  const MuVector mu(shape, n);
  std::vector<LaurentPoly> num, den;
  for (int i = 1; i <= n; ++i) num.push_back(angle_factorial(mu[i]));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) den.push_back(angle_bracket(mu[i] - mu[j]));
  }
  return exact_div(product(std::move(num)), product(std::move(den)));
}

LaurentPoly content_product(Family family, const Partition& shape, int n) {
  require_rows(family, shape, n);
  std::vector<LaurentPoly> factors;
  for (const Cell c : shape.cells()) {
    switch (family) {
      case Family::sp: factors.push_back(angle_bracket(2 * n + content_sp(shape, c))); break;
      case Family::odd_o: factors.push_back(angle_bracket(2 * n + 1 + content_o(shape, c))); break;
      case Family::even_o:
      case Family::so_even: factors.push_back(angle_bracket(2 * n + content_o(shape, c))); break;
      case Family::gl: factors.push_back(square_bracket(n + content_gl(c))); break;
    }
  }
  return product(std::move(factors));
}

LaurentPoly content_product_mu(Family family, const Partition& shape, int n) {
  const MuVector mu(shape, n);
  std::vector<LaurentPoly> num, den;
  switch (family) {
    case Family::sp:
      for (int i = 1; i <= n; ++i) num.push_back(angle_factorial(mu[i] + 1));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) num.push_back(angle_bracket(mu[i] + mu[j] + 2));
      for (int i = 1; i <= n; ++i) den.push_back(angle_factorial(2 * i - 1));
      break;
    case Family::odd_o:
      for (int i = 1; i <= n; ++i) num.push_back(angle_factorial(mu[i]));
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) num.push_back(angle_bracket(mu[i] + mu[j] + 1));
      for (int i = 1; i <= n; ++i) den.push_back(angle_factorial(2 * i - 1));
      break;
    case Family::even_o:
    case Family::so_even:
      for (int i = 1; i <= n; ++i) num.push_back(angle_factorial(mu[i]));
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) num.push_back(angle_bracket(mu[i] + mu[j]));
      for (int i = 1; i <= n; ++i) den.push_back(angle_bracket(mu[i]));
      for (int i = 1; i <= n - 1; ++i) den.push_back(angle_factorial(2 * i));
      break;
    case Family::gl:
      throw Error(Errc::unsupported_route, "gl contents have no μ-form identity here");
  }
  return exact_div(product(std::move(num)), product(std::move(den)));
}

CharResult char_product(Family family, const Partition& shape, int n) {
  require_rows(family, shape, n);
  std::vector<LaurentPoly> num, den;
  switch (family) {
    case Family::gl: {
      num.push_back(LaurentPoly::monomial(b_stat(shape)));
      for (const Cell c : shape.cells()) {
        num.push_back(square_bracket(n + content_gl(c)));
        den.push_back(square_bracket(hook_length(shape, c)));
      }
      break;
    }
    case Family::sp:
    case Family::odd_o:
    case Family::even_o:
    case Family::so_even: {
      const int base = family == Family::odd_o ? 2 * n + 1 : 2 * n;
      for (const Cell c : shape.cells()) {
        const int content = family == Family::sp ? content_sp(shape, c) : content_o(shape, c);
        num.push_back(angle_bracket(base + content));
        den.push_back(angle_bracket(hook_length(shape, c)));
      }
      if (family == Family::so_even) {
        const MuVector mu(shape, n);
        for (int i = 1; i <= n - 1; ++i) {
          num.push_back(angle_bracket(2 * i));
          den.push_back(angle_bracket(i));
        }
        for (int i = 1; i <= n; ++i) {
          num.push_back(angle_bracket(mu[i]));
          den.push_back(angle_bracket(2 * mu[i]));
        }
      }
      break;
    }
  }
  return make_result(family, shape, n, Route::product,
                     exact_div(product(std::move(num)), product(std::move(den))));
}

LaurentPoly so_char(const Partition& shape, int n) {
  require_rows(Family::so_even, shape, n);
  const MuVector mu(shape, n);
  std::vector<LaurentPoly> num, den;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      num.push_back(angle_bracket(mu[i] - mu[j]));
      num.push_back(angle_bracket(mu[i] + mu[j]));
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    den.push_back(angle_factorial(2 * i - 1));
    den.push_back(angle_bracket(i));
  }
  return exact_div(product(std::move(num)), product(std::move(den)));
}

CharResult char_mu_formula(Family family, const Partition& shape, int n) {
  require_rows(family, shape, n);
  const MuVector mu(shape, n);
  std::vector<LaurentPoly> num, den;
  switch (family) {
    case Family::gl:
      throw Error(Errc::unsupported_route, "gl has no μ-form route");
    case Family::sp:
      for (int i = 1; i <= n; ++i) num.push_back(angle_bracket(mu[i] + 1));
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          num.push_back(angle_bracket(mu[i] - mu[j]));
          num.push_back(angle_bracket(mu[i] + mu[j] + 2));
        }
      }
      for (int i = 1; i <= n; ++i) den.push_back(angle_factorial(2 * i - 1));
      break;
    case Family::odd_o:
      for (int i = 1; i <= n; ++i) num.push_back(angle_bracket(2 * mu[i] + 1));
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          num.push_back(angle_bracket(mu[i] - mu[j]));
          num.push_back(angle_bracket(mu[i] + mu[j] + 1));
        }
      }
      for (int i = 1; i <= n; ++i) den.push_back(angle_factorial(2 * i - 1));
      break;
    case Family::even_o:
      for (int i = 1; i <= n; ++i) num.push_back(angle_bracket(2 * mu[i]));
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          num.push_back(angle_bracket(mu[i] - mu[j]));
          num.push_back(angle_bracket(mu[i] + mu[j]));
        }
      }
      for (int i = 1; i <= n; ++i) den.push_back(angle_bracket(mu[i]));
      for (int i = 1; i <= n - 1; ++i) den.push_back(angle_factorial(2 * i));
      break;
    case Family::so_even:
      return make_result(family, shape, n, Route::mu_formula, so_char(shape, n));
  }
  return make_result(family, shape, n, Route::mu_formula,
                     exact_div(product(std::move(num)), product(std::move(den))));
}

CharResult compute_char(Family family, Route route, const Partition& shape, int n) {
  switch (route) {
    case Route::enumeration: return char_enumeration(family, shape, n);
    case Route::determinant: return char_determinant(family, shape, n);
    case Route::product: return char_product(family, shape, n);
    case Route::mu_formula: return char_mu_formula(family, shape, n);
  }
  throw Error(Errc::unsupported_route, "unknown route");
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

BigInt require_integer(const Rational& value, Family family, const Partition& shape, int n) {
  if (denominator(value) != 1) {
    std::ostringstream os;
    os << value << " for " << family_name(family) << " [" << shape.to_string() << "] n=" << n;
    throw Error(Errc::non_integer_dimension, os.str());
  }
  return numerator(value);
}

Rational hook_content_ratio(Family family, const Partition& shape, int n) {
  Rational value = 1;
  for (const Cell c : shape.cells()) {
    int factor = 0;
    switch (family) {
      case Family::gl: factor = n + content_gl(c); break;
      case Family::sp: factor = 2 * n + content_sp(shape, c); break;
      case Family::odd_o: factor = 2 * n + 1 + content_o(shape, c); break;
      case Family::even_o:
      case Family::so_even: factor = 2 * n + content_o(shape, c); break;
    }
    value *= Rational(factor, hook_length(shape, c));
  }
  return value;
}

}  // namespace

BigInt d_so(const Partition& shape, int n) {
  require_rows(Family::so_even, shape, n);
  return require_integer(hook_content_ratio(Family::even_o, shape, n) / 2, Family::so_even, shape, n);
}

BigInt dimension(Family family, const Partition& shape, int n) {
  require_rows(family, shape, n);
  if (family == Family::so_even) return d_so(shape, n);
  return require_integer(hook_content_ratio(family, shape, n), family, shape, n);
}

EvenSplit even_split(const Partition& shape, int n) {
  require_rows(Family::so_even, shape, n);
  EvenSplit split;
  for_each_tableau(Family::even_o, shape, n, [&](const Tableau& t) {
    const EvenClass c = classify_even(t);
    ++split.total;
    if (counts_as_positive(c)) ++split.positive;
    if (counts_as_negative(c)) ++split.negative;
    if (c == EvenClass::both) ++split.both;
    if (c == EvenClass::neither) ++split.neither;
  });
  return split;
}

LaurentPoly so_enumeration(const Partition& shape, int n, bool positive) {
  require_rows(Family::so_even, shape, n);
  ExponentTally tally;
  for_each_tableau(Family::even_o, shape, n, [&](const Tableau& t) {
    const EvenClass c = classify_even(t);
    if (positive ? counts_as_positive(c) : counts_as_negative(c)) tally.add(so_weight_exponent(stats(t)));
  });
  return tally.poly();
}

}  // namespace hookcontent
