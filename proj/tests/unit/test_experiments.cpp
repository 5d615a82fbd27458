#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lanecraft/experiments.hpp"
#include "lanecraft/grid_io.hpp"
#include "../support/oracles.hpp"

using namespace lanecraft;

TEST_CASE("creeps_per_minute arithmetic") {
    MatchStats stats;
    stats.duration = 600.0;
    stats.last_hits = 100;
    CHECK(creeps_per_minute(stats) == doctest::Approx(10.0));

    stats.last_hits = 0;
    CHECK(creeps_per_minute(stats) == doctest::Approx(0.0));

    stats.duration = 22.6 * 60.0;
    stats.last_hits = 230;
    CHECK(creeps_per_minute(stats) == doctest::Approx(10.177).epsilon(1e-3));

    stats.duration = 0.0;
    CHECK_THROWS_AS(creeps_per_minute(stats), std::invalid_argument);
}

TEST_CASE("a capped match ends on time with no winner") {
    MatchConfig cfg;
    cfg.time_cap = 1.0;
    const MatchStats stats = run_match(cfg, 7);
    CHECK(!stats.winner.has_value());
    CHECK(stats.duration == doctest::Approx(1.0));
    CHECK(stats.deaths == 0);
}

TEST_CASE("matches are deterministic per (config, seed)") {
    MatchConfig cfg;
    cfg.time_cap = 45.0;  // enough for one wave collision
    const MatchStats a = run_match(cfg, 42);
    const MatchStats b = run_match(cfg, 42);
    CHECK(a.replay_hash == b.replay_hash);
    CHECK(a.replay_events == b.replay_events);
    CHECK(a.last_hits == b.last_hits);
    CHECK(a.profile == b.profile);

    const MatchStats c = run_match(cfg, 43);
    CHECK(c.replay_hash != a.replay_hash);
}

TEST_CASE("ablation arms consume identical seed lists") {
    MatchConfig cfg;
    cfg.time_cap = 10.0;
    const AblationReport report = run_farm_ablation(cfg, 3, 100, 2);
    REQUIRE(report.phi_on.size() == 3);
    REQUIRE(report.phi_off.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(report.phi_on[i].seed == report.phi_off[i].seed);
        CHECK(report.phi_on[i].seed == 100 + i);
        CHECK(report.phi_on[i].profile == report.phi_off[i].profile);
    }
}

TEST_CASE("solo summary statistics are recomputable from the match list") {
    MatchConfig cfg;
    cfg.time_cap = 10.0;
    const SoloSummary summary = run_solo_win_suite(cfg, 4, 1, 2);
    REQUIRE(summary.matches.size() == 4);

    const SoloSummary again = summarize_solo(summary.matches);
    CHECK(again.wins == summary.wins);
    CHECK(again.total_deaths == summary.total_deaths);
    CHECK(again.mean_duration == doctest::Approx(summary.mean_duration));
    CHECK(again.stddev_duration == doctest::Approx(summary.stddev_duration));
    CHECK(again.mean_cpm == doctest::Approx(summary.mean_cpm));

    // single-match suite reports zero spread
    const SoloSummary one = run_solo_win_suite(cfg, 1, 5, 1);
    CHECK(one.stddev_duration == doctest::Approx(0.0));
}

TEST_CASE("match stats round-trip through json") {
    MatchStats stats;
    stats.seed = 77;
    stats.profile = "mage";
    stats.winner = Team::Blue;
    stats.duration = 823.4;
    stats.kills = 1;
    stats.deaths = 0;
    stats.assists = 2;
    stats.last_hits = 140;
    stats.cpm = 10.2;
    stats.replay_hash = 0xdeadbeefcafef00dull;
    stats.replay_events = 120345;
    stats.safety_violations = 0;

    const MatchStats back = match_stats_from_json(match_stats_to_json(stats));
    CHECK(back.seed == stats.seed);
    CHECK(back.profile == stats.profile);
    CHECK(back.winner == stats.winner);
    CHECK(back.duration == doctest::Approx(stats.duration));
    CHECK(back.kills == stats.kills);
    CHECK(back.assists == stats.assists);
    CHECK(back.last_hits == stats.last_hits);
    CHECK(back.cpm == doctest::Approx(stats.cpm));
    CHECK(back.replay_hash == stats.replay_hash);
    CHECK(back.replay_events == stats.replay_events);
}

TEST_CASE("heatmap scenes exist for every advertised name") {
    for (const std::string& name : heatmap_scene_names()) {
        const auto scene = make_heatmap_scene(name);
        REQUIRE(scene.has_value());
        CHECK(scene->name == name);
    }
    CHECK(!make_heatmap_scene("no-such-scene").has_value());
}

TEST_CASE("the empty scene composes to an all-zero grid") {
    const auto scene = make_heatmap_scene("empty");
    REQUIRE(scene.has_value());
    const InfluenceGrid grid = compose(scene->view, scene->spec, scene->tuning);
    for (double v : grid.values) CHECK(v == 0.0);
}

TEST_CASE("sum-composition creates the interior local maximum max avoids") {
    const auto scene = make_heatmap_scene("max-vs-sum");
    REQUIRE(scene.has_value());
    REQUIRE(scene->sum_variant);

    const InfluenceGrid max_grid = compose(scene->view, scene->spec, scene->tuning);
    const InfluenceGrid sum_grid =
        compose(scene->view, scene->spec, scene->tuning, CreepCombine::Sum);

    const auto& creeps = scene->view.enemy_creeps;
    const double hero_range = scene->view.agent.attack_range;
    const double delta = scene->spec.delta();
    // a cell counts as inside the ring band when the band passes through any
    // part of it, so the center test widens by half a cell diagonal
    const double half_diag = scene->spec.resolution * std::sqrt(0.5);
    auto in_ring_band = [&](CellIndex idx) {
        const WorldPos p = cell_center(idx, scene->spec);
        for (const CreepView& c : creeps) {
            const double d = distance(p, c.pos);
            if (d >= hero_range - delta - half_diag && d <= hero_range + half_diag) {
                return true;
            }
        }
        return false;
    };

    CHECK(oracle::count_strict_local_maxima(sum_grid, in_ring_band) >= 1);
    CHECK(oracle::count_strict_local_maxima(max_grid, in_ring_band) == 0);
}
