#include <benchmark/benchmark.h>

#include "rotaplex/tsp_tt.hpp"

using namespace rotaplex;

static void BM_PermutahedronComplex(benchmark::State& state) {
  const RotationContext ctx = permutahedron_face_context(3);
  for (auto _ : state) {
    PolyhedralComplex rc = rotation_complex(ctx);
    benchmark::DoNotOptimize(rc);
  }
}
BENCHMARK(BM_PermutahedronComplex)->Unit(benchmark::kMillisecond);

static void BM_BirkhoffComplex(benchmark::State& state) {
  const RotationContext ctx = birkhoff_context(3);
  for (auto _ : state) {
    PolyhedralComplex rc = rotation_complex(ctx);
    benchmark::DoNotOptimize(rc);
  }
}
BENCHMARK(BM_BirkhoffComplex)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_Tsp5RestrictedComplex(benchmark::State& state) {
  const RotationContext ctx = tsp_context(5);
  const FaceLattice del = del_N(ctx);
  for (auto _ : state) {
    PolyhedralComplex rc = rotation_complex(ctx, &del);
    benchmark::DoNotOptimize(rc);
  }
}
BENCHMARK(BM_Tsp5RestrictedComplex)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
