// Catalog sweep: serial reference against the OpenMP kernel at several
// worker counts. Arguments are (degree, max period[, workers]).

#include <benchmark/benchmark.h>

#include "portraits/enumeration.hpp"

using namespace portraits;

static void BM_Reference(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    std::size_t entries = 0;
    for (auto _ : state) {
        Catalog c = build_catalog_reference(d, n);
        entries = c.entries.size();
        benchmark::DoNotOptimize(c);
    }
    state.counters["entries"] = static_cast<double>(entries);
}

static void BM_Kernel(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    CatalogOptions opts;
    opts.workers = static_cast<int>(state.range(2));
    std::size_t samples = 0;
    for (auto _ : state) {
        Catalog c = build_catalog(d, n, opts);
        samples = c.stats.samples;
        benchmark::DoNotOptimize(c);
    }
    state.counters["samples"] = static_cast<double>(samples);
}

static void BM_Universe(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(PeriodicUniverse::build(d, n));
    }
}

BENCHMARK(BM_Reference)->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kernel)
    ->ArgsProduct({{2}, {4, 5}, {1, 2, 4, 8}})
    ->Args({3, 3, 1})
    ->Args({3, 3, 8})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Universe)->Args({2, 8})->Args({3, 5})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
