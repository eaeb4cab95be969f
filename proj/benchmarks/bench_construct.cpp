#include <benchmark/benchmark.h>

#include "squareham/corpus.hpp"

static void BM_TraceFaces(benchmark::State& state) {
    auto map = squareham::named("tutte");
    for (auto _ : state) benchmark::DoNotOptimize(squareham::trace_faces(map));
}
BENCHMARK(BM_TraceFaces);

BENCHMARK_MAIN();
