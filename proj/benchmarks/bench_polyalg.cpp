#include <benchmark/benchmark.h>

#include "polyalg/gfseries.hpp"
#include "polyalg/hopfgp.hpp"
#include "polyalg/spectra.hpp"

using namespace polyalg;

// Arrangement tables are cached per kind, so every benchmark below measures
// the computation on warm tables except where noted.

static void BM_FaceEnumeration(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Arrangement arr({ArrangementType::TypeB, d});  // fresh, not the shared instance
    benchmark::DoNotOptimize(arr.num_faces());
  }
}
BENCHMARK(BM_FaceEnumeration)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_TitsProductTable(benchmark::State& state) {
  auto arr = Arrangement::braid(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(arr->num_faces());
  for (auto _ : state) {
    long long acc = 0;
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g) acc += arr->product(f, g);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_TitsProductTable)->DenseRange(3, 5);

static void BM_EtaMobius(benchmark::State& state) {
  auto arr = Arrangement::braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eta_mobius(arr));
}
BENCHMARK(BM_EtaMobius)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_EtaPermutations(benchmark::State& state) {
  auto arr = Arrangement::type_b(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eta_permutations(arr));
}
BENCHMARK(BM_EtaPermutations)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_HPolynomial(benchmark::State& state) {
  const VPolytope p = permutahedron(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h_polynomial(p));
}
BENCHMARK(BM_HPolynomial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

// Phi on a fresh evaluator so the memo cache does not hide the work.
static void BM_PhiPermutahedron(benchmark::State& state) {
  const VPolytope p = typeB_permutahedron(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PhiEvaluator eval;
    benchmark::DoNotOptimize(eval(p));
  }
}
BENCHMARK(BM_PhiPermutahedron)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_MinkowskiSum(benchmark::State& state) {
  const VPolytope p = permutahedron(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(p, p));
}
BENCHMARK(BM_MinkowskiSum)->DenseRange(3, 5);

static void BM_DecomposeB(benchmark::State& state) {
  const VPolytope p = typeB_permutahedron(static_cast<int>(state.range(0)));
  const GeneratorFamilyB family = b_generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(b_decompose(p, family));
}
BENCHMARK(BM_DecomposeB)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Identities(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(order, 6));
}
BENCHMARK(BM_Identities)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_HopfAxioms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hopf_axiom_check(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HopfAxioms)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
