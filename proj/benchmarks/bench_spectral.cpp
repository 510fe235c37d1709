#include <benchmark/benchmark.h>

#include "specq/canonical.hpp"
#include "specq/enumerate.hpp"
#include "specq/graph.hpp"
#include "specq/roots.hpp"
#include "specq/spectra.hpp"

using namespace specq;

namespace {

Graph dense_test_graph(int n) {
  // complement of a path: connected, dense, trivial automorphism group for
  // n >= 8 or so
  return Graph::path(n).complement();
}

void BM_charpoly_q(benchmark::State& state) {
  Graph g = dense_test_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(charpoly_of(g, MatrixKind::SignlessLaplacian));
}
BENCHMARK(BM_charpoly_q)->DenseRange(8, 12);

void BM_charpoly_all_kinds(benchmark::State& state) {
  Graph g = dense_test_graph(10);
  for (auto _ : state)
    for (MatrixKind kind :
         {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian})
      benchmark::DoNotOptimize(charpoly_of(g, kind));
}
BENCHMARK(BM_charpoly_all_kinds);

void BM_root_isolation(benchmark::State& state) {
  IntPoly p = charpoly_of(dense_test_graph(static_cast<int>(state.range(0))),
                          MatrixKind::SignlessLaplacian);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_root_isolation)->DenseRange(8, 12, 2);

void BM_root_refinement(benchmark::State& state) {
  IntPoly p = charpoly_of(dense_test_graph(10), MatrixKind::SignlessLaplacian);
  const Rational window(1, BigInt(1) << 64);
  for (auto _ : state) {
    RootIsolation iso = isolate_real_roots(p);
    for (int i = 0; i < iso.distinct_count(); ++i) iso.refine_to(i, window);
    benchmark::DoNotOptimize(iso);
  }
}
BENCHMARK(BM_root_refinement);

void BM_canonical_form(benchmark::State& state) {
  Graph g = dense_test_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form)->DenseRange(8, 12, 2);

void BM_enumerate_order(benchmark::State& state) {
  EnumerationFilter f;
  f.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_classes(f, 1));
}
BENCHMARK(BM_enumerate_order)->DenseRange(6, 8);

void BM_enumerate_connected_fixed_edges(benchmark::State& state) {
  EnumerationFilter f;
  f.n = 8;
  f.edges = 12;
  f.connected = true;
  for (auto _ : state) benchmark::DoNotOptimize(count_classes(f, 1));
}
BENCHMARK(BM_enumerate_connected_fixed_edges);

void BM_spectral_filter(benchmark::State& state) {
  EnumerationFilter f;
  f.n = 7;
  f.edges = 9;
  f.bipartite = true;
  f.spectral = parse_spectral_predicate("gamma1 > 32/5");
  for (auto _ : state) benchmark::DoNotOptimize(count_classes(f, 1));
}
BENCHMARK(BM_spectral_filter);

}  // namespace

BENCHMARK_MAIN();
