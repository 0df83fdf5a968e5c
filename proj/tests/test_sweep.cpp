#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "hookcontent/sweep.hpp"

using namespace hookcontent;

namespace {

std::string verify_output(const SweepOptions& options, int* code = nullptr) {
  std::ostringstream out;
  const int rc = cli::run_verify(options, out);
  if (code) *code = rc;
  return out.str();
}

LaurentPoly bracket_ratio(const Partition& shape, int shift, bool symplectic_contents) {
  std::vector<LaurentPoly> num, den;
  for (const Cell& c : shape.cells()) {
    num.push_back(angle_bracket(shift + (symplectic_contents ? content_sp(shape, c) : content_o(shape, c))));
    den.push_back(angle_bracket(hook_length(shape, c)));
  }
  return exact_div(product(num), product(den));
}

std::size_t failures_for(Family f, const SweepReport& report) {
  std::size_t k = 0;
  for (const auto& row : report.rows) k += (!row.passed && row.family == f);
  return k;
}

}  // namespace

TEST(Sweep, DefaultBoundsPass) {
  SweepOptions options;
  const SweepReport report = run_sweep(options);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.failed, 0u);
  EXPECT_EQ(report.passed, report.rows.size());
  EXPECT_GT(report.tasks, 300u);
  for (const auto& row : report.rows) EXPECT_TRUE(row.passed) << row.check << " " << row.detail;
}

TEST(Sweep, TaskOrderAndCoverage) {
  SweepOptions options;
  options.max_size = 2;
  options.max_n = 2;
  options.threads = 1;
  const SweepReport report = run_sweep(options);
  // () n=1,2; (1) n=1,2; (2) n=1,2; (1,1) n=2. GL, Sp, OddO, EvenO each,
  // plus so-even for (1) n=1, (2) n=1 and (1,1) n=2.
  EXPECT_EQ(report.tasks, 7u * 4 + 3);
  EXPECT_EQ(report.rows.front().shape, Partition());
  EXPECT_EQ(report.rows.front().family, Family::gl);
  EXPECT_EQ(report.rows.back().shape, Partition({1, 1}));
  EXPECT_EQ(report.rows.back().family, Family::so_even);
}

TEST(Sweep, OutputIdenticalAcrossThreadCounts) {
  SweepOptions options;
  options.max_size = 5;
  options.max_n = 3;
  options.threads = 1;
  const std::string one = verify_output(options);
  options.threads = 4;
  EXPECT_EQ(verify_output(options), one);
  EXPECT_EQ(verify_output(options), one);
}

TEST(Sweep, ThreadsFromEnvironment) {
  ::setenv("TABLEAUX_THREADS", "3", 1);
  EXPECT_EQ(threads_from_env(9), 3u);
  ::setenv("TABLEAUX_THREADS", "zero", 1);
  EXPECT_EQ(threads_from_env(9), 9u);
  ::setenv("TABLEAUX_THREADS", "-2", 1);
  EXPECT_EQ(threads_from_env(9), 9u);
  ::unsetenv("TABLEAUX_THREADS");
  EXPECT_EQ(threads_from_env(9), 9u);
}

TEST(Mutation, SymplecticProductWithOddShiftIsCaught) {
  SweepOptions options;
  options.routes.product = [](Family f, const Partition& s, int n) {
    if (f == Family::sp) return bracket_ratio(s, 2 * n + 1, true);
    return char_product(f, s, n).poly;
  };
  int code = 0;
  const std::string out = verify_output(options, &code);
  EXPECT_EQ(code, cli::kDisagreement);
  EXPECT_NE(out.find("FAIL sp"), std::string::npos);
  EXPECT_NE(out.find("FAILED"), std::string::npos);
  EXPECT_GT(failures_for(Family::sp, run_sweep(options)), 0u);
  EXPECT_EQ(failures_for(Family::odd_o, run_sweep(options)), 0u);
}

TEST(Mutation, MuFormulaConstantIsCaught) {
  SweepOptions options;
  options.routes.mu_formula = [](Family f, const Partition& s, int n) {
    if (f != Family::odd_o) return char_mu_formula(f, s, n).poly;
    // ⟨μ_i + μ_j + 2⟩ in place of ⟨μ_i + μ_j + 1⟩.
    const MuVector mu(s, n);
    std::vector<LaurentPoly> num, den;
    for (int i = 1; i <= n; ++i) {
      num.push_back(angle_bracket(2 * mu[i] + 1));
      den.push_back(angle_factorial(2 * i - 1));
      for (int j = i + 1; j <= n; ++j) {
        num.push_back(angle_bracket(mu[i] - mu[j]));
        num.push_back(angle_bracket(mu[i] + mu[j] + 2));
      }
    }
    return exact_div(product(num), product(den));
  };
  int code = 0;
  verify_output(options, &code);
  EXPECT_EQ(code, cli::kDisagreement);
  EXPECT_GT(failures_for(Family::odd_o, run_sweep(options)), 0u);
}

TEST(Mutation, MissingEvenFactorTwoIsCaught) {
  SweepOptions options;
  options.routes.determinant = [](Family f, const Partition& s, int n) {
    LaurentPoly p = char_determinant(f, s, n).poly;
    if (f == Family::even_o && s.length() == n) p = exact_div(p, LaurentPoly(2));
    return p;
  };
  const SweepReport report = run_sweep(options);
  EXPECT_FALSE(report.ok());
  EXPECT_GT(failures_for(Family::even_o, report), 0u);
}

TEST(Mutation, EnumerationWithWrongStatisticIsCaught) {
  SweepOptions options;
  options.max_size = 3;
  options.max_n = 2;
  options.routes.enumeration = [](Family f, const Partition& s, int n) {
    if (f == Family::sp) return char_enumeration(Family::even_o, s, n).poly;
    return char_enumeration(f, s, n).poly;
  };
  const SweepReport report = run_sweep(options);
  EXPECT_GT(failures_for(Family::sp, report), 0u);
}

TEST(CheckTask, NamesPerFamily) {
  auto names = [](Family f, const Partition& s, int n) {
    std::vector<std::string> out;
    for (const auto& r : check_task(f, s, n, RouteSet::standard())) {
      EXPECT_TRUE(r.passed) << r.detail;
      out.push_back(r.check);
    }
    return out;
  };
  EXPECT_EQ(names(Family::gl, Partition({2, 1}), 3), (std::vector<std::string>{"routes", "gl-coefficients", "q=1"}));
  EXPECT_EQ(names(Family::sp, Partition({2, 1}), 3),
            (std::vector<std::string>{"routes", "hook-lemma", "content-lemma", "palindromy", "q=1", "weight-symmetry"}));
  EXPECT_EQ(names(Family::so_even, Partition({2, 1}), 2),
            (std::vector<std::string>{"routes", "so-negative", "so-split", "palindromy", "q=1"}));
}
