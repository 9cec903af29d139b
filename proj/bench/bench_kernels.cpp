#include <benchmark/benchmark.h>

#include "stse/completion.hpp"
#include "stse/design.hpp"
#include "stse/graph.hpp"

using namespace stse;

namespace {

CompletionConfig restart_config(int threads) {
    CompletionConfig cfg;
    cfg.seed = 11;
    cfg.budget = 400;
    cfg.restarts = 64;
    cfg.threads = threads;
    // A budget this small makes every restart run to exhaustion.
    cfg.target_uncovered = 0;
    return cfg;
}

void BM_RestartsSerial(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    const CompletionConfig cfg = restart_config(1);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(complete_with_restarts_serial(g, {}, cfg));
        } catch (const std::exception&) {
        }
    }
}

void BM_RestartsParallel(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    const CompletionConfig cfg = restart_config(0);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(complete_with_restarts(g, {}, cfg));
        } catch (const std::exception&) {
        }
    }
}

std::vector<Triple> large_system() {
    CompletionConfig cfg;
    cfg.seed = 3;
    return hill_climb_complete(Graph::complete(243), cfg);
}

void BM_VerifySerial(benchmark::State& state) {
    static const auto tris = large_system();
    const Graph host = Graph::complete(243);
    for (auto _ : state) benchmark::DoNotOptimize(verify_triangle_decomposition(host, tris));
}

void BM_VerifyParallel(benchmark::State& state) {
    static const auto tris = large_system();
    const Graph host = Graph::complete(243);
    for (auto _ : state) benchmark::DoNotOptimize(verify_triangle_decomposition_parallel(host, tris));
}

void BM_EvansSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(evans_check_serial(static_cast<int>(state.range(0))));
}

void BM_EvansParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(evans_check(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_RestartsSerial)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestartsParallel)->Arg(45)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvansSerial)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvansParallel)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
