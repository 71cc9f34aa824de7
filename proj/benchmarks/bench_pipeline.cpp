#include "covalg/corpus.hpp"
#include "covalg/lattice.hpp"
#include "covalg/series.hpp"
#include "covalg/toric.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace covalg;

static void BM_SeriesComplete(benchmark::State& state) {
  BipartiteGraph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_cover_series(g));
}
BENCHMARK(BM_SeriesComplete)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_SeriesAntichain(benchmark::State& state) {
  BipartiteGraph g = antichain_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_cover_series(g));
}
BENCHMARK(BM_SeriesAntichain)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_SeriesRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  BipartiteGraph g = random_standard_graph(static_cast<int>(state.range(0)), 0.2, rng);
  SweepOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_cover_series(g, opts));
}
BENCHMARK(BM_SeriesRandom)->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

static void BM_BuildLattice(benchmark::State& state) {
  BipartiteGraph g = antichain_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(g));
}
BENCHMARK(BM_BuildLattice)->DenseRange(8, 16, 4);

static void BM_BuchbergerG3(benchmark::State& state) {
  ToricRing ring(BipartiteGraph(3, {{1, 1}, {2, 2}, {3, 3}, {2, 3}, {3, 2}}));
  auto basis = groebner_basis(ring);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_verify(ring, basis, MonomialOrder(3)));
}
BENCHMARK(BM_BuchbergerG3);

static void BM_BuchbergerBoolean(benchmark::State& state) {
  ToricRing ring(antichain_graph(static_cast<int>(state.range(0))));
  auto basis = groebner_basis(ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger_verify(ring, basis, MonomialOrder(ring.n())));
  }
}
BENCHMARK(BM_BuchbergerBoolean)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_InitialIdealSeries(benchmark::State& state) {
  BipartiteGraph g = antichain_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_via_initial_ideal(g));
}
BENCHMARK(BM_InitialIdealSeries)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DirectCount(benchmark::State& state) {
  BipartiteGraph g = antichain_graph(4);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function_direct(g, d));
}
BENCHMARK(BM_DirectCount)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
