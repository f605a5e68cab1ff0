#include <benchmark/benchmark.h>

#include "rotaplex/face_lattice.hpp"
#include "rotaplex/families.hpp"

using namespace rotaplex;

static void BM_BirkhoffLattice(benchmark::State& state) {
  const Polyhedron b = birkhoff(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    FaceLattice l = face_lattice(b);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_BirkhoffLattice)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Stsp5Lattice(benchmark::State& state) {
  const Polyhedron s = stsp(5);
  for (auto _ : state) {
    FaceLattice l = face_lattice(s);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_Stsp5Lattice)->Unit(benchmark::kMillisecond);

static void BM_Gtsp5Lattice(benchmark::State& state) {
  const Polyhedron g = gtsp(5);
  for (auto _ : state) {
    FaceLattice l = face_lattice(g);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_Gtsp5Lattice)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
