#include "anforge/census.hpp"

#include <benchmark/benchmark.h>

using namespace anforge;

namespace {

const BoxSpec kBox{6, Parity::Even, BigRat(2), true};

CensusOptions options(int threads)
{
    CensusOptions o;
    o.budget = 200;
    o.k = 25;
    o.threads = threads;
    return o;
}

void BM_CountFieldsSerial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(count_fields_serial(kBox, options(1)).distinct_fingerprints);
    state.SetItemsProcessed(state.iterations() * 3600);
}

void BM_CountFieldsOpenMP(benchmark::State& state)
{
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_fields(kBox, options(threads)).distinct_fingerprints);
    state.SetItemsProcessed(state.iterations() * 3600);
}

void BM_DensitySampled(benchmark::State& state)
{
    DensityOptions o;
    o.sample_cap = 2000;
    o.seed = 1;
    o.threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(density_scan(6, Parity::Even, {BigRat(8)}, o).front().full_group);
}

}  // namespace

BENCHMARK(BM_CountFieldsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountFieldsOpenMP)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DensitySampled)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
