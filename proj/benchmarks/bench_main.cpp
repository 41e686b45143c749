#include <benchmark/benchmark.h>

#include "sqtile/basis.hpp"
#include "sqtile/construct.hpp"
#include "sqtile/tiling.hpp"
#include "support/random_tilings.hpp"

using namespace sqtile;

namespace {

void BM_RationalArithmetic(benchmark::State& state) {
  testing::Rng rng(7);
  std::vector<Rational> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(testing::random_positive_rational(rng, 1000, 1000));
  for (auto _ : state) {
    Rational acc(0);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) acc = acc + xs[i] * xs[i + 1] / (xs[i] + xs[i + 1]);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RationalArithmetic);

std::vector<Tiling> tilings(int depth, int count) {
  testing::Rng rng(static_cast<std::uint64_t>(depth) * 31 + 5);
  std::vector<Tiling> out;
  for (int i = 0; i < count; ++i) out.push_back(testing::random_incommensurable_tiling(rng, depth));
  return out;
}

void BM_ExtractBasis(benchmark::State& state) {
  const auto ts = tilings(static_cast<int>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) {
    const Tiling& t = ts[k++ % ts.size()];
    benchmark::DoNotOptimize(extract_basis(testing::side_list(t), t.table));
  }
}
BENCHMARK(BM_ExtractBasis)->DenseRange(2, 6, 2);

void BM_Validate(benchmark::State& state) {
  const auto ts = tilings(static_cast<int>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(validate(ts[k++ % ts.size()]));
}
BENCHMARK(BM_Validate)->DenseRange(2, 6, 2);

void BM_EuclidTiling(benchmark::State& state) {
  const Rational w(state.range(0), 1), h(state.range(0) * 13 + 8, 21);
  for (auto _ : state) benchmark::DoNotOptimize(euclid_tiling(w, h));
}
BENCHMARK(BM_EuclidTiling)->Arg(8)->Arg(89)->Arg(987);

}  // namespace
BENCHMARK_MAIN();
