#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eldecomp/acoustics.hpp"
#include "eldecomp/constitutive.hpp"
#include "eldecomp/decomp.hpp"
#include "eldecomp/voigt.hpp"

using namespace eldecomp;

namespace {

Stiffness random_stiffness(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return Stiffness::from_voigt_entries([&](int a, int b) { return u(rng) + (a == b ? 6.0 : 0.0); });
}

void BM_Decompose(benchmark::State& state) {
  const Stiffness c = random_stiffness(1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(c));
}
BENCHMARK(BM_Decompose);

void BM_Classify(benchmark::State& state) {
  const Stiffness c = random_stiffness(2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(c));
}
BENCHMARK(BM_Classify);

void BM_Energy(benchmark::State& state) {
  const Stiffness c = random_stiffness(3);
  const IrreducibleParts p = decompose(c);
  const SymMat3 e = SymMat3::from_voigt({0.01, -0.02, 0.005, 0.003, 0.0, 0.004});
  for (auto _ : state) benchmark::DoNotOptimize(energy(c, p, e));
}
BENCHMARK(BM_Energy);

void BM_WaveSolve(benchmark::State& state) {
  const Stiffness c = random_stiffness(4);
  const UnitVec3 n = UnitVec3::normalized(Vec3{{0.3, -0.4, 0.8}});
  for (auto _ : state) benchmark::DoNotOptimize(wave_solve(christoffel(c, n, 1.0)));
}
BENCHMARK(BM_WaveSolve);

void BM_Scan(benchmark::State& state) {
  const Stiffness c = random_stiffness(5);
  const std::vector<UnitVec3> dirs = fibonacci_sphere(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_waves(c, 1.0, dirs, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Scan)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_PureModeSearch(benchmark::State& state) {
  const Stiffness c = cubic_stiffness(5.224, 2.044, 1.608);
  PureModeOptions opts;
  opts.grid_n = static_cast<std::size_t>(state.range(0));
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(find_pure_longitudinal(c, 1.0, opts));
}
BENCHMARK(BM_PureModeSearch)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
