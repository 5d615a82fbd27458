// Influence recompute cost on the default lane grid (120x30, 30 features).
// The decision loop rebuilds this grid 10 times per second, so the budget is
// 2ms per compose with plenty of headroom.

#include <benchmark/benchmark.h>

#include <random>

#include "lanecraft/influence.hpp"

using namespace lanecraft;

namespace {

FeatureView thirty_feature_view() {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> fx(2000.0, 10000.0);
    std::uniform_real_distribution<double> fy(500.0, 2500.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);

    FeatureView view;
    view.agent_base = {500.0, 1500.0};
    view.agent.pos = {6000.0, 1500.0};
    view.agent.hp = 480.0;
    view.agent.max_hp = 600.0;
    view.agent.attack_range = 550.0;
    view.agent.move_speed = 325.0;
    for (int i = 0; i < 18; ++i) {
        view.enemy_creeps.push_back(
            {static_cast<EntityId>(100 + i), {fx(rng), fy(rng)}, 450.0 * frac(rng), 450.0});
    }
    for (int i = 0; i < 4; ++i) {
        TowerView t;
        t.id = static_cast<EntityId>(200 + i);
        t.pos = {fx(rng), fy(rng)};
        t.ctx.state = i % 2 == 0 ? TowerAggro::PassiveAggro : TowerAggro::ActiveAggro;
        t.ctx.alpha = i;
        view.enemy_towers.push_back(t);
        TowerView a = t;
        a.id = static_cast<EntityId>(210 + i);
        a.pos = {fx(rng), fy(rng)};
        view.ally_towers.push_back(a);
    }
    for (int i = 0; i < 2; ++i) {
        HeroView h;
        h.id = static_cast<EntityId>(300 + i);
        h.pos = {fx(rng), fy(rng)};
        h.effective_range = 550.0;
        h.tactical_value = 400.0;
        view.enemy_heroes.push_back(h);
        HeroView al = h;
        al.id = static_cast<EntityId>(310 + i);
        al.pos = {fx(rng), fy(rng)};
        view.ally_heroes.push_back(al);
    }
    return view;
}

void BM_ComposeLaneGrid(benchmark::State& state) {
    const FeatureView view = thirty_feature_view();
    const GridSpec spec = GridSpec::for_map(MapSpec{12000.0, 3000.0}, 100.0);
    const InfluenceTuning tuning;
    for (auto _ : state) {
        InfluenceGrid grid = compose(view, spec, tuning);
        benchmark::DoNotOptimize(grid.values.data());
    }
}
BENCHMARK(BM_ComposeLaneGrid)->Unit(benchmark::kMicrosecond);

void BM_ArgmaxInRadius(benchmark::State& state) {
    const GridSpec spec = GridSpec::for_map(MapSpec{12000.0, 3000.0}, 100.0);
    InfluenceGrid grid(spec);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> weight(-100.0, 700.0);
    for (double& v : grid.values) v = weight(rng);
    for (auto _ : state) {
        auto best = argmax_in_radius(grid, {6000.0, 1500.0}, 325.0);
        benchmark::DoNotOptimize(best);
    }
}
BENCHMARK(BM_ArgmaxInRadius)->Unit(benchmark::kNanosecond);

}  // namespace
