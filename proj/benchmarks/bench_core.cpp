#include <benchmark/benchmark.h>

#include "qwedge/entanglement.hpp"
#include "qwedge/fermion_map.hpp"
#include "qwedge/states.hpp"

using namespace qwedge;

static void BM_Eigendecompose9(benchmark::State& state) {
  const ComplexMatrix m = embed(random_mixed(3, 1), 3).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigendecompose(m));
}
BENCHMARK(BM_Eigendecompose9);

static void BM_Embed(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const DensityMatrix rho = random_mixed(wedge_dimension(d), 2);
  for (auto _ : state) benchmark::DoNotOptimize(embed(rho, d));
}
BENCHMARK(BM_Embed)->Arg(3)->Arg(5)->Arg(8);

static void BM_EmbeddedNegativity(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const DensityMatrix rho = random_mixed(wedge_dimension(d), 3);
  for (auto _ : state) benchmark::DoNotOptimize(embedded_negativity(rho, d));
}
BENCHMARK(BM_EmbeddedNegativity)->Arg(3)->Arg(4)->Arg(5);

static void BM_DiagonalCubic(benchmark::State& state) {
  const DiagonalDistribution p({0.5, 0.3, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_cubic_analysis(p));
}
BENCHMARK(BM_DiagonalCubic);

BENCHMARK_MAIN();
