#include <benchmark/benchmark.h>

#include "rotaplex/families.hpp"

using namespace rotaplex;

// V to H for Birkhoff polytopes, starting from the bare vertex list
static void BM_BirkhoffVtoH(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polyhedron b = birkhoff(n);
  for (auto _ : state) {
    Polyhedron p = dd_convert(Polyhedron::from_vertices(b.ambient_dim(), b.vertices()));
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_BirkhoffVtoH)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_PermutahedronVtoH(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polyhedron p = permutahedron(n);
  for (auto _ : state) {
    Polyhedron q = dd_convert(Polyhedron::from_vertices(p.ambient_dim(), p.vertices()));
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_PermutahedronVtoH)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_GtspHtoV(benchmark::State& state) {
  for (auto _ : state) {
    Polyhedron g = gtsp(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GtspHtoV)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
