#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hookcontent::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CharJson) {
  const Result r = run({"char", "--family", "sp", "--shape", "1,1", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("poly").dump(), R"([[-4,"1"],[-2,"1"],[0,"1"],[2,"1"],[4,"1"]])");
  EXPECT_EQ(j.at("dimension"), "5");
  EXPECT_EQ(j.at("route"), "product");
}

TEST(Cli, CharText) {
  const Result r = run({"char", "--family", "odd-o", "--shape", "1,1", "--n", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "O(5) shape=1,1 n=2\nproduct: q^-6 + q^-4 + 2*q^-2 + 2 + 2*q^2 + q^4 + q^6\ndimension: 10\n");
}

TEST(Cli, CharAllRoutesAgree) {
  const Result r = run({"char", "--family", "even-o", "--shape", "1,1", "--n", "2", "--all-routes"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("enumeration: q^-4 + q^-2 + 2 + q^2 + q^4"), std::string::npos);
  EXPECT_NE(r.out.find("determinant: "), std::string::npos);
  EXPECT_NE(r.out.find("mu: "), std::string::npos);
  EXPECT_NE(r.out.find("verdict: AGREE"), std::string::npos);
  const Result gl = run({"char", "--family", "gl", "--shape", "2,1", "--n", "3", "--all-routes", "--format", "json"});
  ASSERT_EQ(gl.code, 0);
  const auto j = nlohmann::json::parse(gl.out);
  EXPECT_EQ(j.at("verdict"), "AGREE");
  EXPECT_EQ(j.at("results").size(), 2u);
}

TEST(Cli, CharLatexAndCsv) {
  Result r = run({"char", "--family", "sp", "--shape", "1,1", "--n", "2", "--format", "latex"});
  EXPECT_EQ(r.out, "q^{-4}+q^{-2}+1+q^{2}+q^{4}\n");
  r = run({"char", "--family", "sp", "--shape", "1,1", "--n", "2", "--format", "csv", "--route", "mu"});
  EXPECT_EQ(r.out, "family,shape,n,route,dimension,poly\nsp,\"1,1\",2,mu,5,\"q^-4 + q^-2 + 1 + q^2 + q^4\"\n");
}

TEST(Cli, CountOddColumn) {
  const Result r = run({"count", "--family", "odd-o", "--shape", "1,1", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "enumerated=10 formula=10 OK\n");
  const Result j = run({"count", "--family", "sp", "--shape", "1,1", "--n", "2", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed.at("group"), "Sp(4)");
  EXPECT_EQ(parsed.at("enumerated"), "5");
  EXPECT_EQ(parsed.at("ok"), true);
}

TEST(Cli, EnumerateText) {
  const Result r = run({"enumerate", "--family", "sp", "--shape", "1,1", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/2\n1/2~\n1~/2\n1~/2~\n2/2~\n");
  const Result so = run({"enumerate", "--family", "so-even", "--shape", "1,1", "--n", "2"});
  EXPECT_EQ(so.out, "1/2\n1~/2~\n2/2~\n");
  const Result j = run({"enumerate", "--family", "even-o", "--shape", "1,1", "--n", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).at("count"), 6);
}

TEST(Cli, ClassifyColumn) {
  Result r = run({"classify", "--family", "even-o", "--shape", "1,1", "--n", "2", "--class", "positive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/2 positive\n1~/2~ positive\n2/2~ both\n");
  r = run({"classify", "--family", "even-o", "--shape", "1,1", "--n", "2", "--class", "negative"});
  EXPECT_EQ(r.out, "1/2~ negative\n1~/2 negative\n2/2~ both\n");
  r = run({"classify", "--family", "even-o", "--shape", "1,1", "--n", "2", "--class", "neither"});
  EXPECT_EQ(r.out, "1/1~ neither\n");
}

TEST(Cli, VerifySmall) {
  const Result r = run({"verify", "--max-size", "3", "--max-n", "2", "--threads", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS sp [1,1] n=2 routes\n"), std::string::npos);
  EXPECT_NE(r.out.find(" failed=0 OK\n"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL "), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"char", "--family", "nope", "--shape", "1", "--n", "1"}).code, 1);
  EXPECT_EQ(run({"char", "--family", "sp", "--shape", "1,2", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"char", "--family", "sp", "--shape", "a", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"char", "--family", "sp", "--shape", "1,1,1", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"char", "--family", "gl", "--shape", "1", "--n", "2", "--route", "determinant"}).code, 1);
  EXPECT_EQ(run({"classify", "--family", "even-o", "--shape", "1", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"classify", "--family", "sp", "--shape", "1,1", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"verify", "--max-size", "99"}).code, 1);
  EXPECT_EQ(run({"count", "--family", "sp", "--shape", "1"}).code, 1);
  const Result r = run({"char", "--family", "sp", "--shape", "1,1,1", "--n", "2"});
  EXPECT_NE(r.err.find("error: "), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"char", "--help"}).code, 0);
}
