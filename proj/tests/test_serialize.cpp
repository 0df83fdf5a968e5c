#include <gtest/gtest.h>

#include <random>

#include "hookcontent/errors.hpp"
#include "hookcontent/serialize.hpp"
#include "oracles.hpp"

using namespace hookcontent;

namespace {

const LaurentPoly kSpColumn{{-4, 1}, {-2, 1}, {0, 1}, {2, 1}, {4, 1}};

Errc parse_error(const std::string& text) {
  try {
    poly_from_json(nlohmann::json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::not_an_integer;
}

}  // namespace

TEST(Json, PolyForm) {
  EXPECT_EQ(poly_to_json(kSpColumn).dump(), R"([[-4,"1"],[-2,"1"],[0,"1"],[2,"1"],[4,"1"]])");
  EXPECT_EQ(poly_to_json(LaurentPoly()).dump(), "[]");
  EXPECT_EQ(poly_from_json(nlohmann::json::parse(R"([[-1,"-12"],[3,"7"]])")), LaurentPoly({{-1, -12}, {3, 7}}));
}

TEST(Json, PolyRoundTripIsIdentity) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p = oracle::random_poly(rng, 8, 30);
    if (trial % 10 == 0) p = p.pow(7);
    const nlohmann::json j = poly_to_json(p);
    EXPECT_EQ(poly_from_json(j), p);
    EXPECT_EQ(poly_to_json(poly_from_json(nlohmann::json::parse(j.dump()))).dump(), j.dump());
  }
}

TEST(Json, RejectsMalformedPolys) {
  EXPECT_EQ(parse_error(R"({"a":1})"), Errc::bad_json);
  EXPECT_EQ(parse_error(R"([[1,"2"],[1,"3"]])"), Errc::bad_json);
  EXPECT_EQ(parse_error(R"([[2,"2"],[1,"3"]])"), Errc::bad_json);
  EXPECT_EQ(parse_error(R"([[1,"0"]])"), Errc::bad_json);
  EXPECT_EQ(parse_error(R"([[1,2]])"), Errc::bad_json);
  EXPECT_EQ(parse_error(R"([[1,"1.5"]])"), Errc::bad_json);
  EXPECT_EQ(parse_error(R"([[1,"-"]])"), Errc::bad_json);
  EXPECT_EQ(parse_error(R"([[1.5,"1"]])"), Errc::bad_json);
  EXPECT_EQ(parse_error(R"([[1]])"), Errc::bad_json);
}

TEST(Json, CharResultRoundTrip) {
  const CharResult r = char_product(Family::odd_o, Partition({2, 1}), 3);
  const nlohmann::json j = char_result_to_json(r);
  EXPECT_EQ(j.at("family"), "odd-o");
  EXPECT_EQ(j.at("shape"), nlohmann::json::array({2, 1}));
  EXPECT_EQ(j.at("route"), "product");
  EXPECT_EQ(j.at("dimension"), r.dimension.str());
  const CharResult back = char_result_from_json(j);
  EXPECT_EQ(back.family, r.family);
  EXPECT_EQ(back.shape, r.shape);
  EXPECT_EQ(back.n, r.n);
  EXPECT_EQ(back.route, r.route);
  EXPECT_EQ(back.poly, r.poly);
  EXPECT_EQ(back.dimension, r.dimension);
  EXPECT_EQ(char_result_to_json(back), j);
  EXPECT_THROW(char_result_from_json(nlohmann::json::object()), Error);
}

TEST(Latex, Examples) {
  EXPECT_EQ(emit_latex(LaurentPoly(1)), "1");
  EXPECT_EQ(emit_latex(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1)), "q^{-1}+q");
  EXPECT_EQ(emit_latex(kSpColumn), "q^{-4}+q^{-2}+1+q^{2}+q^{4}");
  EXPECT_EQ(emit_latex(LaurentPoly({{-2, -3}, {0, 2}, {1, -1}})), "-3q^{-2}+2-q");
  EXPECT_EQ(emit_latex(LaurentPoly()), "0");
}

TEST(Csv, Row) {
  EXPECT_EQ(csv_header(), "family,shape,n,route,dimension,poly");
  const CharResult r = char_product(Family::sp, Partition({1, 1}), 2);
  EXPECT_EQ(csv_row(r), "sp,\"1,1\",2,product,5,\"q^-4 + q^-2 + 1 + q^2 + q^4\"");
}
