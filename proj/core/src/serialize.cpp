#include "hookcontent/serialize.hpp"

#include <sstream>

#include "hookcontent/errors.hpp"

namespace hookcontent {

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c.str()});
  return out;
}

namespace {

BigInt parse_bigint(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw Error(Errc::bad_json, "coefficient '" + s + "' is not a decimal integer");
  }
  return BigInt(s);
}

}  // namespace

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(Errc::bad_json, "polynomial must be an array");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string()) {
      throw Error(Errc::bad_json, "term must be [int, \"coefficient\"], got " + term.dump());
    }
    const int e = term[0].get<int>();
    if (!terms.empty() && e <= terms.back().first) {
      throw Error(Errc::bad_json, "exponents must be strictly ascending");
    }
    BigInt c = parse_bigint(term[1].get<std::string>());
    if (c == 0) throw Error(Errc::bad_json, "zero coefficient at exponent " + std::to_string(e));
    terms.emplace_back(e, std::move(c));
  }
  return LaurentPoly(terms);
}

nlohmann::json char_result_to_json(const CharResult& r) {
  nlohmann::json shape = nlohmann::json::array();
  for (int p : r.shape.parts()) shape.push_back(p);
  return {
      {"family", std::string(family_name(r.family))},
      {"shape", shape},
      {"n", r.n},
      {"route", std::string(route_name(r.route))},
      {"poly", poly_to_json(r.poly)},
      {"dimension", r.dimension.str()},
  };
}

CharResult char_result_from_json(const nlohmann::json& j) {
  try {
    const auto family = parse_family(j.at("family").get<std::string>());
    const auto route = parse_route(j.at("route").get<std::string>());
    if (!family || !route) throw Error(Errc::bad_json, "unknown family or route");
    LaurentPoly poly = poly_from_json(j.at("poly"));
    BigInt dim = parse_bigint(j.at("dimension").get<std::string>());
    return CharResult{*family, Partition(j.at("shape").get<std::vector<int>>()), j.at("n").get<int>(),
                      *route, std::move(poly), std::move(dim)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::bad_json, e.what());
  }
}

std::string emit_latex(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'q';
    if (e != 1) os << "^{" << e << '}';
  }
  return os.str();
}

std::string csv_header() { return "family,shape,n,route,dimension,poly"; }

std::string csv_row(const CharResult& r) {
  // Shapes and polynomials contain commas or spaces, so both are quoted.
  std::ostringstream os;
  os << family_name(r.family) << ",\"" << r.shape.to_string() << "\"," << r.n << ','
     << route_name(r.route) << ',' << r.dimension << ",\"" << r.poly.to_string() << '"';
  return os.str();
}

}  // namespace hookcontent
