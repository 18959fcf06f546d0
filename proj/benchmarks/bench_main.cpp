#include <benchmark/benchmark.h>

#include <cmath>

#include "nacoh/cochain.hpp"
#include "nacoh/cocycle_search.hpp"
#include "nacoh/complex.hpp"
#include "nacoh/group.hpp"
#include "nacoh/rng.hpp"

using namespace nacoh;

static void BM_BuildGroup(benchmark::State& state, const char* spec) {
  for (auto _ : state) benchmark::DoNotOptimize(build_group(spec));
}
BENCHMARK_CAPTURE(BM_BuildGroup, A5, "A5");
BENCHMARK_CAPTURE(BM_BuildGroup, PSL27, "PSL27");
BENCHMARK_CAPTURE(BM_BuildGroup, M11, "M11")->Unit(benchmark::kMillisecond);

static void BM_SampleComplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_complex(n, 0.1, seed++));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(triple_count(n)));
}
BENCHMARK(BM_SampleComplex)->Arg(40)->Arg(100);

// Near the C2 threshold the search does real branching.
static void BM_HasNontrivialClass(benchmark::State& state, const char* spec, double alpha) {
  const std::size_t n = 40;
  const GroupPtr g = build_group(spec);
  const double p = alpha * std::log(double(n)) / double(n);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const Complex2 y = sample_complex(n, p, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(has_nontrivial_class(y, g));
  }
}
BENCHMARK_CAPTURE(BM_HasNontrivialClass, C2_sparse, "C2", 1.0);
BENCHMARK_CAPTURE(BM_HasNontrivialClass, C2_threshold, "C2", 2.0);
BENCHMARK_CAPTURE(BM_HasNontrivialClass, A5_dense, "A5", 8.0);

static void BM_OrbitWeight(benchmark::State& state, const char* spec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GroupPtr g = build_group(spec);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const Cochain1 phi = random_cochain1(g, n, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(orbit_weight(phi));
  }
}
BENCHMARK_CAPTURE(BM_OrbitWeight, C2, "C2")->Arg(6)->Arg(10);
BENCHMARK_CAPTURE(BM_OrbitWeight, A5, "A5")->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CoboundaryNorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Cochain1 phi = random_cochain1(build_group("A5"), n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_norm(phi));
}
BENCHMARK(BM_CoboundaryNorm)->Arg(20)->Arg(60);

BENCHMARK_MAIN();
