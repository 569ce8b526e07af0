#include <benchmark/benchmark.h>

#include <random>

#include "copgeo/grid_measures.hpp"
#include "copgeo/mcd_geometry.hpp"
#include "copgeo/oracles.hpp"
#include "copgeo/self_similar.hpp"

namespace {

using namespace copgeo;

void BM_InversionCount(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto p = Permutation::random(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(inversion_count(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InversionCount)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_OmegaRegion(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto h = shuffle_from_permutation(Permutation::random(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(omega_region(h).area);
}
BENCHMARK(BM_OmegaRegion)->RangeMultiplier(2)->Range(4, 64);

void BM_OmegaArea(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto h = shuffle_from_permutation(Permutation::random(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(omega_area(h));
}
BENCHMARK(BM_OmegaArea)->RangeMultiplier(4)->Range(4, 4096);

void BM_IterateShuffle(benchmark::State& state) {
  const Permutation p({3, 1, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(iterate_shuffle(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_IterateShuffle)->DenseRange(1, 7, 2);

void BM_GridTau(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = grid_from_shuffle(shuffle_from_permutation(Permutation::random(n, rng)), n);
  for (auto _ : state) benchmark::DoNotOptimize(kendall_tau_grid(g));
}
BENCHMARK(BM_GridTau)->RangeMultiplier(4)->Range(4, 256);

void BM_LengthMeasure(benchmark::State& state) {
  const CdfFunction pi = [](double x, double y) { return x * y; };
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(length_measure_numeric(pi, k, 256));
}
BENCHMARK(BM_LengthMeasure)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

void BM_MonteCarloTau(benchmark::State& state) {
  const auto h = iterate_shuffle(Permutation({1, 3, 2}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(mc_kendall_tau(h, static_cast<std::size_t>(state.range(0)), 7));
}
BENCHMARK(BM_MonteCarloTau)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
