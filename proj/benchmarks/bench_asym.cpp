#include <benchmark/benchmark.h>

#include <geosieve/asym.hpp>

using namespace geosieve;

static void BM_SolveDelta(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    PrecisionGuard guard(50);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_delta(2, 3, n, 50));
    }
}
BENCHMARK(BM_SolveDelta)->Arg(50)->Arg(400)->Arg(10000);

static void BM_CompareExact(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    PrecisionGuard guard(50);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare_exact(1, 1, n, 50));
    }
}
BENCHMARK(BM_CompareExact)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
