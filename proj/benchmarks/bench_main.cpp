#include <benchmark/benchmark.h>

#include "hookcontent/characters.hpp"
#include "hookcontent/determinant.hpp"
#include "hookcontent/sweep.hpp"
#include "hookcontent/tableaux.hpp"

using namespace hookcontent;

namespace {

Family family_arg(int64_t k) { return kAllFamilies[static_cast<std::size_t>(k)]; }

void BM_Enumerate(benchmark::State& state) {
  const Family f = family_arg(state.range(0));
  const Partition shape({3, 2, 1});
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_tableaux(f, shape, n));
  state.SetLabel(std::string(family_name(f)));
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{0, 1, 2, 3}, {3, 4}})->Unit(benchmark::kMillisecond);

PolyMatrix symplectic_numerator(int n) {
  const Partition shape({4, 3, 2, 1});
  const MuVector mu(shape, n);
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int e = (2 * j - 1) * (mu[i] + 1);
      m(i - 1, j - 1) = LaurentPoly::monomial(e) - LaurentPoly::monomial(-e);
    }
  }
  return m;
}

void BM_DeterminantCofactor(benchmark::State& state) {
  const PolyMatrix m = symplectic_numerator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_cofactor(m));
}
BENCHMARK(BM_DeterminantCofactor)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_DeterminantBareiss(benchmark::State& state) {
  const PolyMatrix m = symplectic_numerator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_bareiss(m));
}
BENCHMARK(BM_DeterminantBareiss)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_CharProduct(benchmark::State& state) {
  const Partition shape({7, 5, 4, 1});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_product(Family::sp, shape, n));
}
BENCHMARK(BM_CharProduct)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
  SweepOptions options;
  options.max_size = static_cast<int>(state.range(0));
  options.max_n = 4;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(options));
}
BENCHMARK(BM_Sweep)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
