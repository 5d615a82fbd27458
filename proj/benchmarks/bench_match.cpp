// Wall-clock cost of whole simulated matches. The informational target is a
// 30-minute solo match in under 15 seconds.

#include <benchmark/benchmark.h>

#include "lanecraft/config.hpp"
#include "lanecraft/experiments.hpp"

using namespace lanecraft;

namespace {

void BM_SoloMatchMinutes(benchmark::State& state) {
    MatchConfig config;
    config.time_cap = 60.0 * static_cast<double>(state.range(0));
    config.nexus_hp = 1e9;  // keep the match running for the whole cap
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const MatchStats stats = run_match(config, seed++);
        benchmark::DoNotOptimize(stats.replay_hash);
    }
    state.SetLabel("simulated minutes per iteration");
}
BENCHMARK(BM_SoloMatchMinutes)->Arg(5)->Arg(30)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
