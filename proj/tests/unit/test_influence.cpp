#include <doctest.h>

#include <cmath>
#include <random>

#include "lanecraft/influence.hpp"
#include "../support/oracles.hpp"

using namespace lanecraft;

namespace {

AgentView default_agent() {
    AgentView agent;
    agent.id = 100;
    agent.pos = {1000.0, 1000.0};
    agent.hp = 600.0;
    agent.max_hp = 600.0;
    agent.move_speed = 325.0;
    agent.attack_range = 550.0;
    return agent;
}

TowerView tower_at(WorldPos pos, TowerAggro state, int alpha) {
    TowerView t;
    t.id = 10;
    t.pos = pos;
    t.ctx.state = state;
    t.ctx.alpha = alpha;
    return t;
}

// Place a cell at an exact distance from a feature along +x.
WorldPos at_distance(WorldPos from, double d) { return {from.x + d, from.y}; }

}  // namespace

TEST_CASE("tau: equal distances give 1, ratios pass through, floor clamps") {
    const WorldPos base{0.0, 0.0};
    CHECK(tau({1500.0, 0.0}, {0.0, 1500.0}, base, 100.0) == doctest::Approx(1.0));
    CHECK(tau({3000.0, 0.0}, {0.0, 1500.0}, base, 100.0) == doctest::Approx(2.0));
    // cell on the base: denominator floors at 100
    CHECK(tau({500.0, 0.0}, {0.0, 0.0}, base, 100.0) == doctest::Approx(5.0));
}

TEST_CASE("tau scales linearly in the unit-to-base distance") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(0.0, 3000.0);
    const WorldPos base{200.0, 200.0};
    for (int i = 0; i < 200; ++i) {
        const WorldPos cell{coord(rng), coord(rng)};
        if (distance(cell, base) < 100.0) continue;  // stay above the floor
        const WorldPos unit{coord(rng), coord(rng)};
        const WorldPos doubled{base.x + 2.0 * (unit.x - base.x),
                               base.y + 2.0 * (unit.y - base.y)};
        CHECK(tau(doubled, cell, base, 100.0) ==
              doctest::Approx(2.0 * tau(unit, cell, base, 100.0)).epsilon(1e-12));
    }
}

TEST_CASE("epsilon radius: healthy agents may dive, dead ones never enter") {
    TowerView tower = tower_at({0.0, 0.0}, TowerAggro::PassiveAggro, 0);
    AgentView agent = default_agent();

    agent.hp = 600.0;
    CHECK(epsilon_radius(tower, agent) == doctest::Approx(0.0));
    agent.hp = 300.0;
    CHECK(epsilon_radius(tower, agent) == doctest::Approx(385.0));
    agent.hp = 0.0;
    CHECK(epsilon_radius(tower, agent) == doctest::Approx(775.0));
}

TEST_CASE("enemy tower weight: favorable branch piecewise values") {
    const WorldPos base{-10000.0, 0.0};  // far away so tau stays ~1
    AgentView agent = default_agent();
    const double delta = 50.0;

    SUBCASE("inside the approach zone the weight is the distance itself") {
        TowerView tower = tower_at({0.0, 0.0}, TowerAggro::PassiveAggro, 3);
        const WorldPos cell = at_distance(tower.pos, 400.0);
        // base collinear with cell keeps tau == 1
        const double w = enemy_tower_influence(cell, tower, agent, base, delta, 100.0);
        CHECK(w == doctest::Approx(400.0).epsilon(1e-6));
    }
    SUBCASE("ring band scales by tau") {
        TowerView tower = tower_at({0.0, 0.0}, TowerAggro::Idle, 4);
        // engineered so d_tb / d_pb = 1.2 exactly: tower at 0, cell at 520
        // toward the base side, base chosen on the axis
        const WorldPos cell{520.0, 0.0};
        const WorldPos tuned_base{cell.x + 2600.0, 0.0};  // d_pb = 2600, d_tb = 3120
        const double w = enemy_tower_influence(cell, tower, agent, tuned_base, delta, 100.0);
        CHECK(w == doctest::Approx(1.2 * 520.0).epsilon(1e-9));  // 624
    }
    SUBCASE("beyond the band the weight decays toward the rim") {
        TowerView tower = tower_at({0.0, 0.0}, TowerAggro::PassiveAggro, 5);
        const double w = enemy_tower_influence(at_distance(tower.pos, 700.0), tower, agent,
                                               base, delta, 100.0);
        CHECK(w == doctest::Approx(75.0).epsilon(1e-9));  // 775 - 700
    }
}

TEST_CASE("enemy tower weight: hostile branch") {
    const WorldPos base{-10000.0, 0.0};
    AgentView agent = default_agent();
    const double delta = 50.0;
    // hp 300, move 325 -> epsilon 385; shrink hp for a 300-unit check below
    TowerView tower = tower_at({0.0, 0.0}, TowerAggro::ActiveAggro, 5);

    agent.hp = 368.0;  // epsilon = 775 - 368*325/250 = 296.6
    const double eps = epsilon_radius(tower, agent);
    CHECK(eps == doctest::Approx(296.6).epsilon(1e-9));

    CHECK(enemy_tower_influence(at_distance(tower.pos, 600.0), tower, agent, base, delta,
                                100.0) == doctest::Approx(-775.0));
    CHECK(enemy_tower_influence(at_distance(tower.pos, 200.0), tower, agent, base, delta,
                                100.0) == kForbidden);

    SUBCASE("a thin creep shield is hostile even without tower aggro") {
        TowerView passive = tower_at({0.0, 0.0}, TowerAggro::PassiveAggro, 2);
        CHECK(enemy_tower_influence(at_distance(passive.pos, 600.0), passive, agent, base,
                                    delta, 100.0) == doctest::Approx(-775.0));
    }
}

TEST_CASE("enemy creep weight: spec sample points") {
    InfluenceTuning tuning;
    const double delta = 50.0;
    CreepView creep{1, {0.0, 0.0}, 450.0, 450.0};
    // base on the creep/cell perpendicular bisector makes tau exactly 1
    auto bisector_base = [](double cell_x) { return WorldPos{cell_x / 2.0, -50000.0}; };

    SUBCASE("close to the creep the weight is plain distance") {
        const auto w = enemy_creep_influence(at_distance(creep.pos, 300.0), creep, 550.0,
                                             bisector_base(300.0), delta, tuning);
        REQUIRE(w.has_value());
        CHECK(*w == doctest::Approx(300.0));
    }
    SUBCASE("ring band rewards dying creeps") {
        creep.hp = 90.0;  // phi = 20
        auto low = enemy_creep_influence(at_distance(creep.pos, 530.0), creep, 550.0,
                                         bisector_base(530.0), delta, tuning);
        REQUIRE(low.has_value());
        CHECK(*low == doctest::Approx(610.0).epsilon(1e-6));  // 530 + 100 - 20

        creep.hp = 450.0;  // phi = 100
        auto full = enemy_creep_influence(at_distance(creep.pos, 530.0), creep, 550.0,
                                          bisector_base(530.0), delta, tuning);
        REQUIRE(full.has_value());
        CHECK(*full == doctest::Approx(530.0).epsilon(1e-6));
    }
    SUBCASE("linear falloff past hero range") {
        creep.hp = 450.0;
        auto w = enemy_creep_influence(at_distance(creep.pos, 620.0), creep, 550.0,
                                       bisector_base(620.0), delta, tuning);
        REQUIRE(w.has_value());
        CHECK(*w == doctest::Approx(480.0).epsilon(1e-6));  // 550 - 70

        tuning.enemy_creep_falloff_enabled = false;
        CHECK(!enemy_creep_influence(at_distance(creep.pos, 620.0), creep, 550.0,
                                     bisector_base(620.0), delta, tuning)
                   .has_value());
    }
    SUBCASE("phi disabled pins the HP term") {
        tuning.phi_enabled = false;
        creep.hp = 45.0;
        auto w = enemy_creep_influence(at_distance(creep.pos, 530.0), creep, 550.0,
                                       bisector_base(530.0), delta, tuning);
        REQUIRE(w.has_value());
        CHECK(*w == doctest::Approx(530.0).epsilon(1e-6));  // 530 + 100 - 100
    }
}

TEST_CASE("phi monotonicity: lower HP never lowers the field, raises the ring") {
    InfluenceTuning tuning;
    const WorldPos base{-5000.0, 0.0};
    const double delta = 50.0;
    CreepView full{1, {0.0, 0.0}, 450.0, 450.0};
    CreepView hurt = full;
    hurt.hp = 45.0;

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> d_dist(0.0, 850.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    bool strictly_raised = false;
    for (int i = 0; i < 400; ++i) {
        const double d = d_dist(rng);
        const double a = angle(rng);
        const WorldPos cell{d * std::cos(a), d * std::sin(a)};
        const auto w_full = enemy_creep_influence(cell, full, 550.0, base, delta, tuning);
        const auto w_hurt = enemy_creep_influence(cell, hurt, 550.0, base, delta, tuning);
        REQUIRE(w_full.has_value() == w_hurt.has_value());
        if (!w_full) continue;
        CHECK(*w_hurt >= *w_full - 1e-9);
        if (d >= 500.0 && d <= 550.0 && *w_hurt > *w_full + 1e-9) strictly_raised = true;
    }
    CHECK(strictly_raised);
}

TEST_CASE("ally tower weight: linear decay outside the collision margin") {
    TowerView tower = tower_at({0.0, 0.0}, TowerAggro::Idle, 0);
    const auto near = ally_tower_influence(at_distance(tower.pos, 300.0), tower, 200.0);
    REQUIRE(near.has_value());
    CHECK(*near == doctest::Approx(475.0));
    CHECK(!ally_tower_influence(at_distance(tower.pos, 150.0), tower, 200.0).has_value());
    const auto rim = ally_tower_influence(at_distance(tower.pos, 775.0), tower, 200.0);
    REQUIRE(rim.has_value());
    CHECK(*rim == doctest::Approx(0.0));
}

TEST_CASE("hero influence: enemy plateau overwrites, ally value adds, range gates both") {
    HeroView hero;
    hero.pos = {0.0, 0.0};
    hero.effective_range = 550.0;
    hero.tactical_value = 500.0;

    const auto enemy = enemy_hero_influence(at_distance(hero.pos, 400.0), hero);
    REQUIRE(enemy.has_value());
    CHECK(*enemy == doctest::Approx(-500.0));

    hero.tactical_value = 200.0;
    const auto ally = ally_hero_influence(at_distance(hero.pos, 400.0), hero);
    REQUIRE(ally.has_value());
    CHECK(*ally == doctest::Approx(200.0));

    CHECK(!enemy_hero_influence(at_distance(hero.pos, 600.0), hero).has_value());
    CHECK(!ally_hero_influence(at_distance(hero.pos, 600.0), hero).has_value());
}

// ---------------------------------------------------------------------------
// randomized equation equivalence against the reference evaluators
// ---------------------------------------------------------------------------

TEST_CASE("equations match the reference evaluator on randomized inputs") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coord(0.0, 4000.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    std::uniform_int_distribution<int> alpha_dist(0, 6);
    std::uniform_int_distribution<int> state_dist(0, 2);

    for (int i = 0; i < 1200; ++i) {
        const WorldPos base{coord(rng), coord(rng)};
        AgentView agent = default_agent();
        agent.hp = 600.0 * frac(rng);
        InfluenceTuning tuning;
        tuning.phi_enabled = frac(rng) < 0.5;
        tuning.enemy_creep_falloff_enabled = frac(rng) < 0.5;

        TowerView tower = tower_at({coord(rng), coord(rng)},
                                   static_cast<TowerAggro>(state_dist(rng)), alpha_dist(rng));
        const double d = frac(rng) * tower.range;
        const double a = frac(rng) * 6.283185307179586;
        const WorldPos cell{tower.pos.x + d * std::cos(a), tower.pos.y + d * std::sin(a)};

        const double got =
            enemy_tower_influence(cell, tower, agent, base, 50.0, tuning.tau_denominator_floor);
        const double want = oracle::enemy_tower_ref(cell.x, cell.y, tower, agent, base.x,
                                                    base.y, 50.0, 100.0);
        if (want == oracle::kNegInf) {
            CHECK(got == kForbidden);
        } else {
            CHECK(got == doctest::Approx(want).epsilon(1e-9));
        }

        CreepView creep{1, {coord(rng), coord(rng)}, 0.0, 450.0};
        creep.hp = 450.0 * frac(rng);
        const WorldPos ccell{creep.pos.x + frac(rng) * 1000.0 - 500.0,
                             creep.pos.y + frac(rng) * 1000.0 - 500.0};
        const auto creep_got =
            enemy_creep_influence(ccell, creep, 550.0, base, 50.0, tuning);
        const auto creep_want =
            oracle::enemy_creep_ref(ccell.x, ccell.y, creep, 550.0, base.x, base.y, 50.0,
                                    tuning);
        REQUIRE(creep_got.has_value() == creep_want.has_value());
        if (creep_got) CHECK(*creep_got == doctest::Approx(*creep_want).epsilon(1e-9));
    }
}

// ---------------------------------------------------------------------------
// compose
// ---------------------------------------------------------------------------

namespace {

FeatureView random_world(std::mt19937_64& rng, const MapSpec& map) {
    std::uniform_real_distribution<double> fx(0.0, map.width);
    std::uniform_real_distribution<double> fy(0.0, map.height);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    std::uniform_int_distribution<int> count(0, 2);
    std::uniform_int_distribution<int> alpha_dist(0, 5);
    std::uniform_int_distribution<int> state_dist(0, 2);

    FeatureView view;
    view.agent_base = {fx(rng), fy(rng)};
    view.agent.pos = {fx(rng), fy(rng)};
    view.agent.hp = 600.0 * frac(rng);
    view.agent.max_hp = 600.0;
    view.agent.attack_range = 550.0;
    view.agent.move_speed = 325.0;

    EntityId next = 1;
    for (int i = count(rng); i > 0; --i) {
        view.enemy_creeps.push_back({next++, {fx(rng), fy(rng)}, 450.0 * frac(rng), 450.0});
    }
    for (int i = count(rng); i > 0; --i) {
        TowerView t;
        t.id = next++;
        t.pos = {fx(rng), fy(rng)};
        t.ctx.state = static_cast<TowerAggro>(state_dist(rng));
        t.ctx.alpha = alpha_dist(rng);
        view.enemy_towers.push_back(t);
    }
    for (int i = count(rng); i > 0; --i) {
        TowerView t;
        t.id = next++;
        t.pos = {fx(rng), fy(rng)};
        view.ally_towers.push_back(t);
    }
    for (int i = count(rng); i > 0; --i) {
        HeroView h;
        h.id = next++;
        h.pos = {fx(rng), fy(rng)};
        h.hp = h.max_hp = 600.0;
        h.effective_range = 450.0 + 200.0 * frac(rng);
        h.tactical_value = 200.0 + 400.0 * frac(rng);
        view.enemy_heroes.push_back(h);
    }
    for (int i = count(rng); i > 0; --i) {
        HeroView h;
        h.id = next++;
        h.pos = {fx(rng), fy(rng)};
        h.hp = h.max_hp = 600.0;
        h.effective_range = 450.0 + 200.0 * frac(rng);
        h.tactical_value = 100.0 + 200.0 * frac(rng);
        view.ally_heroes.push_back(h);
    }
    return view;
}

void check_grids_equal(const InfluenceGrid& got, const InfluenceGrid& want) {
    REQUIRE(got.values.size() == want.values.size());
    for (std::size_t i = 0; i < got.values.size(); ++i) {
        if (want.values[i] == kForbidden) {
            CHECK(got.values[i] == kForbidden);
        } else {
            CHECK(got.values[i] == doctest::Approx(want.values[i]).epsilon(1e-9));
        }
    }
}

}  // namespace

TEST_CASE("compose of an empty world is the zero grid") {
    FeatureView view;
    view.agent = default_agent();
    view.agent_base = {0.0, 0.0};
    const InfluenceGrid grid =
        compose(view, GridSpec::for_map(MapSpec{2000.0, 2000.0}, 100.0), InfluenceTuning{});
    for (double v : grid.values) CHECK(v == 0.0);
}

TEST_CASE("compose matches the per-cell reference on random small worlds") {
    std::mt19937_64 rng(555);
    const MapSpec map{2000.0, 2000.0};
    const GridSpec spec = GridSpec::for_map(map, 100.0);
    InfluenceTuning tuning;
    for (int trial = 0; trial < 40; ++trial) {
        const FeatureView view = random_world(rng, map);
        check_grids_equal(compose(view, spec, tuning), oracle::compose_ref(view, spec, tuning));
    }
}

TEST_CASE("creep pass is permutation invariant") {
    std::mt19937_64 rng(777);
    const MapSpec map{2000.0, 2000.0};
    const GridSpec spec = GridSpec::for_map(map, 100.0);
    InfluenceTuning tuning;
    for (int trial = 0; trial < 10; ++trial) {
        FeatureView view = random_world(rng, map);
        view.enemy_creeps.push_back({90, {900.0, 900.0}, 100.0, 450.0});
        view.enemy_creeps.push_back({91, {1100.0, 1000.0}, 450.0, 450.0});
        const InfluenceGrid forward = compose(view, spec, tuning);
        std::reverse(view.enemy_creeps.begin(), view.enemy_creeps.end());
        const InfluenceGrid backward = compose(view, spec, tuning);
        CHECK(forward.values == backward.values);
    }
}

TEST_CASE("two creeps compose to the per-cell max of their single fields") {
    const MapSpec map{3000.0, 2000.0};
    const GridSpec spec = GridSpec::for_map(map, 100.0);
    InfluenceTuning tuning;

    FeatureView both;
    both.agent = default_agent();
    both.agent_base = {100.0, 1000.0};
    both.enemy_creeps.push_back({1, {1200.0, 1000.0}, 450.0, 450.0});
    both.enemy_creeps.push_back({2, {2000.0, 1000.0}, 450.0, 450.0});

    FeatureView first = both;
    first.enemy_creeps.resize(1);
    FeatureView second = both;
    second.enemy_creeps.erase(second.enemy_creeps.begin());

    const InfluenceGrid combined = compose(both, spec, tuning);
    const InfluenceGrid a = compose(first, spec, tuning);
    const InfluenceGrid b = compose(second, spec, tuning);
    for (std::size_t i = 0; i < combined.values.size(); ++i) {
        CHECK(combined.values[i] ==
              doctest::Approx(std::max(a.values[i], b.values[i])).epsilon(1e-12));
    }
}

TEST_CASE("tower pass overwrites creep values inside the footprint") {
    const MapSpec map{3000.0, 2000.0};
    const GridSpec spec = GridSpec::for_map(map, 100.0);
    InfluenceTuning tuning;

    FeatureView view;
    view.agent = default_agent();
    view.agent_base = {100.0, 1000.0};
    view.enemy_towers.push_back(tower_at({1500.0, 1000.0}, TowerAggro::ActiveAggro, 0));
    view.enemy_creeps.push_back({1, {1400.0, 1000.0}, 450.0, 450.0});

    const InfluenceGrid grid = compose(view, spec, tuning);
    const TowerView& tower = view.enemy_towers.front();
    for (int row = 0; row < spec.rows; ++row) {
        for (int col = 0; col < spec.cols; ++col) {
            const WorldPos p = cell_center({col, row}, spec);
            if (distance(p, tower.pos) > tower.range) continue;
            const double v = grid.at({col, row});
            // hostile tower cells, never creep ring values
            CHECK((v == kForbidden || v == doctest::Approx(-775.0)));
        }
    }
}

TEST_CASE("hostile epsilon zone survives every later pass") {
    const MapSpec map{3000.0, 2000.0};
    const GridSpec spec = GridSpec::for_map(map, 100.0);
    InfluenceTuning tuning;

    FeatureView view;
    view.agent = default_agent();
    view.agent.hp = 100.0;  // epsilon = 775 - 100*325/250 = 645
    view.agent_base = {100.0, 1000.0};
    view.enemy_towers.push_back(tower_at({1500.0, 1000.0}, TowerAggro::ActiveAggro, 0));
    HeroView ally;
    ally.id = 7;
    ally.pos = {1500.0, 1000.0};
    ally.effective_range = 600.0;
    ally.tactical_value = 300.0;
    view.ally_heroes.push_back(ally);

    const double eps = epsilon_radius(view.enemy_towers.front(), view.agent);
    const InfluenceGrid grid = compose(view, spec, tuning);
    for (int row = 0; row < spec.rows; ++row) {
        for (int col = 0; col < spec.cols; ++col) {
            const WorldPos p = cell_center({col, row}, spec);
            if (distance(p, view.enemy_towers.front().pos) <= eps) {
                CHECK(grid.at({col, row}) == kForbidden);
            }
        }
    }
}
