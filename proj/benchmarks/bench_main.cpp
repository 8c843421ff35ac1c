#include <benchmark/benchmark.h>

#include <vector>

#include "rankone/ball_average.hpp"
#include "rankone/monte_carlo.hpp"
#include "rankone/spherical.hpp"

using namespace rankone;

static void BM_SphericalFn(benchmark::State& state) {
  const auto g = make_group(GroupFamily::su, 3);
  const auto p = SpectralParam::principal(1.7);
  const double t = static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(phi(g, p, t));
}
BENCHMARK(BM_SphericalFn)->Arg(1)->Arg(6)->Arg(40);

static void BM_SphericalFnDegenerate(benchmark::State& state) {
  const RankOneGroup g(3, 0);
  const auto p = SpectralParam::complementary(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(phi(g, p, 10.0));
}
BENCHMARK(BM_SphericalFnDegenerate);

static void BM_PsiValues(benchmark::State& state) {
  const auto g = make_group(GroupFamily::so, 3);
  const auto p = SpectralParam::complementary(0.4);
  std::vector<double> ts;
  for (int i = 1; i <= state.range(0); ++i) ts.push_back(40.0 * i / state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi_values(g, p, ts));
}
BENCHMARK(BM_PsiValues)->Arg(10)->Arg(400);

static void BM_VolumeProfileBuild(benchmark::State& state) {
  const auto g = make_group(GroupFamily::so, 2);
  for (auto _ : state) benchmark::DoNotOptimize(VolumeProfile(g, 10.0));
}
BENCHMARK(BM_VolumeProfileBuild);

static void BM_MonteCarlo(benchmark::State& state) {
  const VolumeProfile prof(make_group(GroupFamily::so, 2), 8.0);
  MCOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_average(prof, 6.0, n, Observable::cusp(2.0), 42, {0.1, 1.3}, opts));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Args({1 << 16, 1})->Args({1 << 16, 4})->Unit(benchmark::kMillisecond);

static void BM_Reduce(benchmark::State& state) {
  const HPoint z{0.123, 1e-4};
  for (auto _ : state) benchmark::DoNotOptimize(reduce(z));
}
BENCHMARK(BM_Reduce);

BENCHMARK_MAIN();
