#include <benchmark/benchmark.h>

#include <geosieve/brun.hpp>
#include <geosieve/lattice_generators.hpp>
#include <geosieve/matroid.hpp>
#include <geosieve/poset.hpp>

using namespace geosieve;

static void BM_PartitionLatticeBuild(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition_lattice(n));
    }
}
BENCHMARK(BM_PartitionLatticeBuild)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_MobiusFromBottom(benchmark::State &state)
{
    const auto L = partition_lattice(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mobius(L, L.bottom()));
    }
    state.counters["elements"] = static_cast<double>(L.size());
}
BENCHMARK(BM_MobiusFromBottom)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_IsGeometric(benchmark::State &state)
{
    const auto L = boolean_lattice(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_geometric(L));
    }
}
BENCHMARK(BM_IsGeometric)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_VerifyBrunPi7(benchmark::State &state)
{
    const auto L = partition_lattice(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_brun(L));
    }
}
BENCHMARK(BM_VerifyBrunPi7)->Unit(benchmark::kMillisecond);

static void BM_FlatsLatticeK5(benchmark::State &state)
{
    const auto M = Matroid::complete_graph(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(flats_lattice(M));
    }
}
BENCHMARK(BM_FlatsLatticeK5)->Unit(benchmark::kMillisecond);

static void BM_CharPolyUniform(benchmark::State &state)
{
    const auto M = Matroid::uniform(4, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_poly(M));
    }
}
BENCHMARK(BM_CharPolyUniform)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
