#include <benchmark/benchmark.h>

#include <random>

#include "chroma/gadgets.hpp"
#include "chroma/lmcsc.hpp"
#include "chroma/mcsc.hpp"
#include "chroma/smcsc.hpp"

using namespace chroma;

namespace {

Instance random_instance(int n, int k, double width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, width);
  Instance inst;
  inst.k = k;
  for (int i = 0; i < n; ++i) inst.disks.push_back({{coord(rng), coord(rng)}, i < k ? i : static_cast<int>(rng() % k)});
  return inst;
}

void BM_McscExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_instance(n, 4, 8.0, 1);
  const PrecisePointSet ps = as_point_set(center_realization(inst), inst.k);
  for (auto _ : state) benchmark::DoNotOptimize(mcsc_exact(ps));
  state.SetComplexityN(n);
}
BENCHMARK(BM_McscExact)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_Smcsc(benchmark::State& state) {
  const Instance inst = random_instance(static_cast<int>(state.range(0)), 4, 8.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(smcsc(inst));
}
BENCHMARK(BM_Smcsc)->Arg(40)->Arg(400);

void BM_LmcscApprox(benchmark::State& state) {
  const Instance inst = random_instance(static_cast<int>(state.range(0)), 4, 0.4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lmcsc_approx(inst));
}
BENCHMARK(BM_LmcscApprox)->Arg(40)->Arg(400);

void BM_SamplingOracle(benchmark::State& state) {
  const Instance inst = random_instance(30, 3, 4.0, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lmcsc_sampling_oracle(inst, 1000, 5, {}, Workers{static_cast<unsigned>(state.range(0))}));
  }
}
BENCHMARK(BM_SamplingOracle)->Arg(1)->Arg(4)->UseRealTime();

void BM_TightnessOracle(benchmark::State& state) {
  const Instance inst = make_tightness_instance(0.05, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lmcsc_sampling_oracle(inst, 100, 6));
}
BENCHMARK(BM_TightnessOracle);

void BM_GridOracle(benchmark::State& state) {
  const Instance inst = random_instance(15, 4, 8.0, 7);
  const PrecisePointSet ps = as_point_set(center_realization(inst), inst.k);
  for (auto _ : state) benchmark::DoNotOptimize(mcsc_grid_oracle(ps, 0.005));
}
BENCHMARK(BM_GridOracle);

}  // namespace

BENCHMARK_MAIN();
