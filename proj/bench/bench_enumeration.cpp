#include "fourman/geography.hpp"
#include "fourman/geography_kernels.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace fourman;

BkQuery bk_query(long long size) { return {Rational(1, 2), 1, size, 9 * size}; }
GeographyQuery fa_query(long long size) { return {2, Rational(1, 2), 1, size, size}; }

void BM_BkSerial(benchmark::State& state)
{
  auto q = bk_query(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::bk_region_serial(q));
}

void BM_BkParallel(benchmark::State& state)
{
  auto q = bk_query(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::bk_region_parallel(q));
}

void BM_FreeActionsSerial(benchmark::State& state)
{
  auto q = fa_query(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::free_action_region_serial(q));
}

void BM_FreeActionsParallel(benchmark::State& state)
{
  auto q = fa_query(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::free_action_region_parallel(q));
}

} // namespace

BENCHMARK(BM_BkSerial)->Arg(50)->Arg(200);
BENCHMARK(BM_BkParallel)->Arg(50)->Arg(200);
BENCHMARK(BM_FreeActionsSerial)->Arg(100)->Arg(400);
BENCHMARK(BM_FreeActionsParallel)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
