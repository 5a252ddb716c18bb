#include <benchmark/benchmark.h>

#include "meshmorph/genmesh.hpp"
#include "meshmorph/metrics.hpp"
#include "meshmorph/morph.hpp"

using namespace meshmorph;

static void BM_BuildAdjacency(benchmark::State& state) {
  TriMesh mesh = make_icosphere(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_adjacency(mesh));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(mesh.faces.size()));
}
BENCHMARK(BM_BuildAdjacency)->DenseRange(2, 5);

static void BM_ComputeField(benchmark::State& state) {
  TriMesh mesh = make_icosphere(static_cast<int>(state.range(0)), 1.0);
  EdgeAdjacency adj = build_adjacency(mesh);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_field(mesh, adj));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(adj.edges.size()));
}
BENCHMARK(BM_ComputeField)->DenseRange(2, 5);

static void BM_MorphT(benchmark::State& state) {
  TriMesh mesh = make_cube(static_cast<int>(state.range(0)));
  MorphParams params{2, 2, 0.001};
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_T(mesh, params));
  }
}
BENCHMARK(BM_MorphT)->DenseRange(2, 4);

static void BM_CollectMetrics(benchmark::State& state) {
  TriMesh mesh = make_icosphere(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(collect_metrics(mesh, 0));
  }
}
BENCHMARK(BM_CollectMetrics)->DenseRange(2, 4);

BENCHMARK_MAIN();
