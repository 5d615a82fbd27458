// Match configuration: one JSON document with sections, every field
// defaulted so an empty document is a valid lane. Validation happens before
// any simulation runs and reports every offending field at once.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lanecraft/agent.hpp"
#include "lanecraft/influence.hpp"
#include "lanecraft/sim.hpp"

namespace lanecraft {

struct ConfigError : std::runtime_error {
    std::vector<std::string> issues;

    explicit ConfigError(std::vector<std::string> problems);
};

struct UnitStatsConfig {
    double hp = 1.0;
    double attack_damage = 0.0;
    double attack_period = 1.0;
    double windup = 0.0;
    double range = 100.0;
    double move_speed = 325.0;
    double aggro_radius = 600.0;
    double hero_aggro_radius = 0.0;
};

struct MatchConfig {
    // map: one straight lane, bases at the ends, two towers per team
    double map_width = 12000.0;
    double map_height = 3000.0;
    double lane_y = 1500.0;
    double base_x_blue = 500.0;
    double base_x_red = 11500.0;
    std::vector<double> tower_x_blue = {3500.0, 5000.0};
    std::vector<double> tower_x_red = {7000.0, 8500.0};
    // heroes walk to lane before the first waves meet mid-map
    double hero_spawn_x_blue = 5500.0;
    double hero_spawn_x_red = 6500.0;

    UnitStatsConfig hero{600.0, 60.0, 1.0 / 0.7, 0.25, 550.0, 325.0, 0.0};
    UnitStatsConfig melee_creep{450.0, 12.0, 1.6, 0.25, 110.0, 325.0, 600.0};
    UnitStatsConfig ranged_creep{280.0, 23.0, 2.2, 0.25, 500.0, 325.0, 600.0};

    double tower_hp = 3500.0;
    double tower_damage = 150.0;
    double tower_attack_period = 1.2;
    double tower_range = 775.0;
    double tower_retarget_delay = 2.0;  // aiming pause after switching targets
    double nexus_hp = 2000.0;

    WaveConfig wave;

    double dt = 1.0 / 30.0;
    double time_cap = 2400.0;  // 40 minutes

    InfluenceTuning tuning;
    double latency = 0.05;
    double turn_time = 0.0;
    double im_rate = 10.0;
    double decision_horizon = 6.0;
    // archetype name, or "random" to sample a ranged archetype per seed
    std::string agent_profile = "random";

    double grid_resolution = 100.0;
    ProfileTable profiles = ProfileTable::defaults();

    std::uint64_t seed = 0;
};

// Parse + validate. Unknown keys are ignored; all range violations are
// collected and thrown together.
MatchConfig parse_config(const std::string& json_text);
MatchConfig load_config_file(const std::string& path);

std::string config_to_json(const MatchConfig& config);

// Collected range violations, empty when the config is sound.
std::vector<std::string> validate_config(const MatchConfig& config);

}  // namespace lanecraft
