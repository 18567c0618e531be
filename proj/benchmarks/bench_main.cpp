#include <benchmark/benchmark.h>

#include "ssok/build.hpp"
#include "ssok/iso.hpp"
#include "ssok/ops.hpp"

using namespace ssok;

static void BM_Product(benchmark::State& state) {
  auto a = standard_simplex((int)state.range(0));
  auto b = standard_simplex(1);
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b).sset.total());
}
BENCHMARK(BM_Product)->Arg(2)->Arg(3)->Arg(4);

static void BM_Join(benchmark::State& state) {
  auto a = standard_simplex((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(join(a, a).sset.total());
}
BENCHMARK(BM_Join)->Arg(2)->Arg(3);

static void BM_Iso(benchmark::State& state) {
  auto a = product(standard_simplex(2), standard_simplex(1)).sset;
  auto b = a;
  for (auto _ : state)
    benchmark::DoNotOptimize(is_isomorphic(a, b).status == IsoStatus::Iso);
}
BENCHMARK(BM_Iso);

BENCHMARK_MAIN();
