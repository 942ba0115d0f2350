#include <memory>

#include <benchmark/benchmark.h>

#include <geosieve/dowling.hpp>
#include <geosieve/sieve.hpp>

using namespace geosieve;

static void BM_BuildQn(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto m = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_Qn(n, m));
    }
}
BENCHMARK(BM_BuildQn)->Args({3, 3})->Args({4, 2})->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_WhitneyTables(benchmark::State &state)
{
    const auto nmax = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(whitney_first_table(3, nmax));
        benchmark::DoNotOptimize(whitney_second_table(3, 2, nmax));
    }
}
BENCHMARK(BM_WhitneyTables)->Arg(40)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_RDowlingNumbers(benchmark::State &state)
{
    const auto nmax = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(r_dowling_numbers(2, 3, nmax));
    }
}
BENCHMARK(BM_RDowlingNumbers)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_ShiftedConvolutionGrid(benchmark::State &state)
{
    for (auto _ : state) {
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned t = n; t <= 12; ++t) {
                benchmark::DoNotOptimize(shifted_convolution(3, n, t, 20));
            }
        }
    }
}
BENCHMARK(BM_ShiftedConvolutionGrid)->Unit(benchmark::kMillisecond);

static void BM_DowlingSieve(benchmark::State &state)
{
    auto D = std::make_shared<const DowlingLattice>(build_Qn(5, 2));
    const auto inst = dowling_sieve_instance(D, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sifted_count_exact(inst));
        benchmark::DoNotOptimize(brun_bounds(inst, 1));
    }
}
BENCHMARK(BM_DowlingSieve)->Unit(benchmark::kMillisecond);
