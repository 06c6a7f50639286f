#include <benchmark/benchmark.h>

#include "occupancy/models.hpp"
#include "occupancy/transforms.hpp"

using namespace occ;

static void BM_NormConstRecursion(benchmark::State& state) {
    auto a = mb_weights(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto c = norm_const(a, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_NormConstRecursion)->Args({8, 16})->Args({16, 32})->Args({32, 64});

static void BM_EnumerateSupport(benchmark::State& state) {
    for (auto _ : state) {
        auto s = enumerate_support(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_EnumerateSupport)->Args({6, 6})->Args({8, 8});

static void BM_RealizeAndMerge(benchmark::State& state) {
    MaSpec spec{be_weights(static_cast<int>(state.range(1))), static_cast<int>(state.range(0)),
                static_cast<int>(state.range(1))};
    for (auto _ : state) {
        auto merged = merge(realize(spec), 2);
        benchmark::DoNotOptimize(merged);
    }
}
BENCHMARK(BM_RealizeAndMerge)->Args({6, 4})->Args({8, 5});

BENCHMARK_MAIN();
