#include <doctest.h>

#include <string>
#include <vector>

#include "lanecraft/config.hpp"
#include "lanecraft/replay.hpp"

using namespace lanecraft;

TEST_CASE("default config validates cleanly") {
    CHECK(validate_config(MatchConfig{}).empty());
}

TEST_CASE("config document overrides land in the right fields") {
    const std::string doc = R"({
        "map": {"width": 8000, "lane_y": 1200, "base_x_red": 7500,
                "tower_x_blue": [2500, 3500], "tower_x_red": [4500, 5500],
                "hero_spawn_x_red": 4300},
        "stats": {"hero": {"hp": 700}, "tower": {"damage": 120}},
        "wave": {"melee_count": 4},
        "agent": {"phi_enabled": false, "im_rate": 5, "profile": "mage"},
        "grid": {"resolution": 50},
        "seed": 9
    })";
    const MatchConfig c = parse_config(doc);
    CHECK(c.map_width == doctest::Approx(8000.0));
    CHECK(c.base_x_red == doctest::Approx(7500.0));
    CHECK(c.tower_x_red == std::vector<double>{4500.0, 5500.0});
    CHECK(c.lane_y == doctest::Approx(1200.0));
    CHECK(c.hero.hp == doctest::Approx(700.0));
    CHECK(c.tower_damage == doctest::Approx(120.0));
    CHECK(c.wave.melee_count == 4);
    CHECK(!c.tuning.phi_enabled);
    CHECK(c.im_rate == doctest::Approx(5.0));
    CHECK(c.agent_profile == "mage");
    CHECK(c.grid_resolution == doctest::Approx(50.0));
    CHECK(c.seed == 9);
    // untouched fields keep their defaults
    CHECK(c.map_height == doctest::Approx(3000.0));
    CHECK(c.hero.attack_damage == doctest::Approx(60.0));
}

TEST_CASE("validation lists every offending field") {
    const std::string doc = R"({
        "tick": {"dt": 0},
        "agent": {"creep_bonus": -5, "tau_denominator_floor": 0},
        "grid": {"resolution": -1}
    })";
    try {
        parse_config(doc);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("tick.dt") != std::string::npos);
        CHECK(what.find("agent.creep_bonus") != std::string::npos);
        CHECK(what.find("agent.tau_denominator_floor") != std::string::npos);
        CHECK(what.find("grid.resolution") != std::string::npos);
        CHECK(e.issues.size() == 4);
    }
}

TEST_CASE("malformed json is rejected with a parse error") {
    CHECK_THROWS_AS(parse_config("{ not json"), ConfigError);
}

TEST_CASE("unknown agent profile is rejected") {
    CHECK_THROWS_AS(parse_config(R"({"agent": {"profile": "does_not_exist"}})"), ConfigError);
}

TEST_CASE("config json round-trips") {
    MatchConfig c;
    c.seed = 1234;
    c.tuning.phi_enabled = false;
    c.wave.spawn_spacing = 150.0;
    const MatchConfig back = parse_config(config_to_json(c));
    CHECK(back.seed == 1234);
    CHECK(!back.tuning.phi_enabled);
    CHECK(back.wave.spawn_spacing == doctest::Approx(150.0));
    CHECK(back.hero.attack_period == doctest::Approx(c.hero.attack_period));
    CHECK(back.profiles.profiles.size() == c.profiles.profiles.size());
}

TEST_CASE("events serialize with a stable shape") {
    Event e;
    e.tick = 450;
    e.time = 15.0;
    e.kind = EventKind::Damage;
    e.actor = 10;
    e.target = 1000;
    e.value = 150.0;
    CHECK(event_to_json_line(e) ==
          "{\"tick\":450,\"time\":15.000000,\"kind\":\"Damage\",\"actor\":10,"
          "\"target\":1000,\"value\":150}\n");

    Event m;
    m.kind = EventKind::Move;
    m.actor = 100;
    m.x = 6050.0;
    m.y = 1550.0;
    m.has_pos = true;
    const std::string line = event_to_json_line(m);
    CHECK(line.find("\"kind\":\"Move\"") != std::string::npos);
    CHECK(line.find("\"x\":6050.000") != std::string::npos);
}

TEST_CASE("replay hashes depend on content only") {
    Event e;
    e.kind = EventKind::Attack;
    e.actor = 1;
    e.target = 2;

    ReplayWriter a;
    a.add(e);
    ReplayWriter b;
    b.add(e);
    CHECK(a.hash() == b.hash());
    CHECK(a.event_count() == 1);

    e.target = 3;
    ReplayWriter c;
    c.add(e);
    CHECK(c.hash() != a.hash());
}
