#include "lanecraft/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lanecraft {

namespace {

using nlohmann::json;

std::string join_issues(const std::vector<std::string>& issues) {
    std::string out = "invalid config:";
    for (const auto& issue : issues) {
        out += "\n  - ";
        out += issue;
    }
    return out;
}

template <typename T>
void read(const json& j, const char* key, T& out) {
    if (auto it = j.find(key); it != j.end()) out = it->get<T>();
}

void read_stats(const json& j, const char* key, UnitStatsConfig& out) {
    auto it = j.find(key);
    if (it == j.end()) return;
    read(*it, "hp", out.hp);
    read(*it, "attack_damage", out.attack_damage);
    read(*it, "attack_period", out.attack_period);
    read(*it, "windup", out.windup);
    read(*it, "range", out.range);
    read(*it, "move_speed", out.move_speed);
    read(*it, "aggro_radius", out.aggro_radius);
    read(*it, "hero_aggro_radius", out.hero_aggro_radius);
}

json stats_to_json(const UnitStatsConfig& s) {
    return json{{"hp", s.hp},
                {"attack_damage", s.attack_damage},
                {"attack_period", s.attack_period},
                {"windup", s.windup},
                {"range", s.range},
                {"move_speed", s.move_speed},
                {"aggro_radius", s.aggro_radius},
                {"hero_aggro_radius", s.hero_aggro_radius}};
}

void check_stats(const UnitStatsConfig& s, const std::string& path,
                 std::vector<std::string>& issues) {
    if (s.hp <= 0.0) issues.push_back(path + ".hp must be > 0");
    if (s.attack_damage < 0.0) issues.push_back(path + ".attack_damage must be >= 0");
    if (s.windup < 0.0) issues.push_back(path + ".windup must be >= 0");
    if (s.attack_period <= s.windup)
        issues.push_back(path + ".attack_period must exceed windup");
    if (s.range <= 0.0) issues.push_back(path + ".range must be > 0");
    if (s.move_speed <= 0.0) issues.push_back(path + ".move_speed must be > 0");
    if (s.aggro_radius < 0.0) issues.push_back(path + ".aggro_radius must be >= 0");
    if (s.hero_aggro_radius < 0.0) {
        issues.push_back(path + ".hero_aggro_radius must be >= 0");
    }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_issues(problems)), issues(std::move(problems)) {}

std::vector<std::string> validate_config(const MatchConfig& c) {
    std::vector<std::string> issues;
    if (c.map_width <= 0.0) issues.push_back("map.width must be > 0");
    if (c.map_height <= 0.0) issues.push_back("map.height must be > 0");
    if (c.lane_y < 0.0 || c.lane_y > c.map_height)
        issues.push_back("map.lane_y must lie inside the map");
    if (c.base_x_blue < 0.0 || c.base_x_blue > c.map_width)
        issues.push_back("map.base_x_blue must lie inside the map");
    if (c.base_x_red < 0.0 || c.base_x_red > c.map_width)
        issues.push_back("map.base_x_red must lie inside the map");
    for (double x : c.tower_x_blue) {
        if (x < 0.0 || x > c.map_width) {
            issues.push_back("map.tower_x_blue entries must lie inside the map");
            break;
        }
    }
    for (double x : c.tower_x_red) {
        if (x < 0.0 || x > c.map_width) {
            issues.push_back("map.tower_x_red entries must lie inside the map");
            break;
        }
    }

    check_stats(c.hero, "stats.hero", issues);
    check_stats(c.melee_creep, "stats.melee_creep", issues);
    check_stats(c.ranged_creep, "stats.ranged_creep", issues);

    if (c.tower_hp <= 0.0) issues.push_back("stats.tower.hp must be > 0");
    if (c.tower_damage < 0.0) issues.push_back("stats.tower.damage must be >= 0");
    if (c.tower_attack_period <= 0.0) issues.push_back("stats.tower.attack_period must be > 0");
    if (c.tower_range <= 0.0) issues.push_back("stats.tower.range must be > 0");
    if (c.tower_retarget_delay < 0.0)
        issues.push_back("stats.tower.retarget_delay must be >= 0");
    if (c.nexus_hp <= 0.0) issues.push_back("stats.nexus_hp must be > 0");

    if (c.wave.period <= 0.0) issues.push_back("wave.period must be > 0");
    if (c.wave.first_spawn < 0.0) issues.push_back("wave.first_spawn must be >= 0");
    if (c.wave.melee_count < 0) issues.push_back("wave.melee_count must be >= 0");
    if (c.wave.ranged_count < 0) issues.push_back("wave.ranged_count must be >= 0");
    if (c.wave.spawn_spacing < 0.0) issues.push_back("wave.spawn_spacing must be >= 0");

    if (c.dt <= 0.0) issues.push_back("tick.dt must be > 0");
    if (c.time_cap <= 0.0) issues.push_back("tick.time_cap must be > 0");

    if (c.tuning.creep_bonus < 0.0) issues.push_back("agent.creep_bonus must be >= 0");
    if (c.tuning.ally_tower_margin < 0.0)
        issues.push_back("agent.ally_tower_margin must be >= 0");
    if (c.tuning.creep_falloff_extent < 0.0)
        issues.push_back("agent.creep_falloff_extent must be >= 0");
    if (c.tuning.tau_denominator_floor <= 0.0)
        issues.push_back("agent.tau_denominator_floor must be > 0");
    if (c.tuning.hero_range_override && *c.tuning.hero_range_override <= 0.0)
        issues.push_back("agent.hero_range_override must be > 0 when set");
    if (c.latency < 0.0) issues.push_back("agent.latency must be >= 0");
    if (c.turn_time < 0.0) issues.push_back("agent.turn_time must be >= 0");
    if (c.im_rate <= 0.0) issues.push_back("agent.im_rate must be > 0");
    if (c.decision_horizon <= 0.0) issues.push_back("agent.decision_horizon must be > 0");

    if (c.grid_resolution <= 0.0) issues.push_back("grid.resolution must be > 0");

    for (const HeroProfile& p : c.profiles.profiles) {
        if (p.name.empty()) issues.push_back("profiles[].name must be non-empty");
        if (p.effective_range <= 0.0)
            issues.push_back("profiles[" + p.name + "].effective_range must be > 0");
        if (p.tactical_value <= 0.0)
            issues.push_back("profiles[" + p.name + "].tactical_value must be > 0");
    }
    if (c.agent_profile != "random" && !c.profiles.find(c.agent_profile)) {
        issues.push_back("agent.profile '" + c.agent_profile + "' not found in profiles");
    }
    return issues;
}

MatchConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("json parse error: ") + e.what()});
    }

    MatchConfig c;
    try {
        if (auto it = j.find("map"); it != j.end()) {
            read(*it, "width", c.map_width);
            read(*it, "height", c.map_height);
            read(*it, "lane_y", c.lane_y);
            read(*it, "base_x_blue", c.base_x_blue);
            read(*it, "base_x_red", c.base_x_red);
            read(*it, "tower_x_blue", c.tower_x_blue);
            read(*it, "tower_x_red", c.tower_x_red);
            read(*it, "hero_spawn_x_blue", c.hero_spawn_x_blue);
            read(*it, "hero_spawn_x_red", c.hero_spawn_x_red);
        }
        if (auto it = j.find("stats"); it != j.end()) {
            read_stats(*it, "hero", c.hero);
            read_stats(*it, "melee_creep", c.melee_creep);
            read_stats(*it, "ranged_creep", c.ranged_creep);
            if (auto t = it->find("tower"); t != it->end()) {
                read(*t, "hp", c.tower_hp);
                read(*t, "damage", c.tower_damage);
                read(*t, "attack_period", c.tower_attack_period);
                read(*t, "range", c.tower_range);
                read(*t, "retarget_delay", c.tower_retarget_delay);
            }
            read(*it, "nexus_hp", c.nexus_hp);
        }
        if (auto it = j.find("wave"); it != j.end()) {
            read(*it, "period", c.wave.period);
            read(*it, "first_spawn", c.wave.first_spawn);
            read(*it, "melee_count", c.wave.melee_count);
            read(*it, "ranged_count", c.wave.ranged_count);
            read(*it, "spawn_spacing", c.wave.spawn_spacing);
        }
        if (auto it = j.find("tick"); it != j.end()) {
            read(*it, "dt", c.dt);
            read(*it, "time_cap", c.time_cap);
        }
        if (auto it = j.find("agent"); it != j.end()) {
            read(*it, "phi_enabled", c.tuning.phi_enabled);
            read(*it, "creep_bonus", c.tuning.creep_bonus);
            read(*it, "ally_tower_margin", c.tuning.ally_tower_margin);
            read(*it, "enemy_creep_falloff_enabled", c.tuning.enemy_creep_falloff_enabled);
            read(*it, "creep_falloff_extent", c.tuning.creep_falloff_extent);
            read(*it, "tau_denominator_floor", c.tuning.tau_denominator_floor);
            if (auto h = it->find("hero_range_override"); h != it->end() && !h->is_null()) {
                c.tuning.hero_range_override = h->get<double>();
            }
            read(*it, "latency", c.latency);
            read(*it, "turn_time", c.turn_time);
            read(*it, "im_rate", c.im_rate);
            read(*it, "decision_horizon", c.decision_horizon);
            read(*it, "profile", c.agent_profile);
        }
        if (auto it = j.find("grid"); it != j.end()) {
            read(*it, "resolution", c.grid_resolution);
        }
        if (auto it = j.find("profiles"); it != j.end()) {
            c.profiles.profiles.clear();
            for (const auto& pj : *it) {
                HeroProfile p;
                read(pj, "name", p.name);
                read(pj, "effective_range", p.effective_range);
                read(pj, "tactical_value", p.tactical_value);
                read(pj, "is_melee", p.is_melee);
                c.profiles.profiles.push_back(p);
            }
        }
        read(j, "seed", c.seed);
    } catch (const json::exception& e) {
        throw ConfigError({std::string("json type error: ") + e.what()});
    }

    if (auto issues = validate_config(c); !issues.empty()) throw ConfigError(std::move(issues));
    return c;
}

MatchConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_json(const MatchConfig& c) {
    json profiles = json::array();
    for (const HeroProfile& p : c.profiles.profiles) {
        profiles.push_back({{"name", p.name},
                            {"effective_range", p.effective_range},
                            {"tactical_value", p.tactical_value},
                            {"is_melee", p.is_melee}});
    }
    json agent{{"phi_enabled", c.tuning.phi_enabled},
               {"creep_bonus", c.tuning.creep_bonus},
               {"ally_tower_margin", c.tuning.ally_tower_margin},
               {"enemy_creep_falloff_enabled", c.tuning.enemy_creep_falloff_enabled},
               {"creep_falloff_extent", c.tuning.creep_falloff_extent},
               {"tau_denominator_floor", c.tuning.tau_denominator_floor},
               {"latency", c.latency},
               {"turn_time", c.turn_time},
               {"im_rate", c.im_rate},
               {"decision_horizon", c.decision_horizon},
               {"profile", c.agent_profile}};
    if (c.tuning.hero_range_override) {
        agent["hero_range_override"] = *c.tuning.hero_range_override;
    }
    json j{{"map",
            {{"width", c.map_width},
             {"height", c.map_height},
             {"lane_y", c.lane_y},
             {"base_x_blue", c.base_x_blue},
             {"base_x_red", c.base_x_red},
             {"tower_x_blue", c.tower_x_blue},
             {"tower_x_red", c.tower_x_red},
             {"hero_spawn_x_blue", c.hero_spawn_x_blue},
             {"hero_spawn_x_red", c.hero_spawn_x_red}}},
           {"stats",
            {{"hero", stats_to_json(c.hero)},
             {"melee_creep", stats_to_json(c.melee_creep)},
             {"ranged_creep", stats_to_json(c.ranged_creep)},
             {"tower",
              {{"hp", c.tower_hp},
               {"damage", c.tower_damage},
               {"attack_period", c.tower_attack_period},
               {"range", c.tower_range},
               {"retarget_delay", c.tower_retarget_delay}}},
             {"nexus_hp", c.nexus_hp}}},
           {"wave",
            {{"period", c.wave.period},
             {"first_spawn", c.wave.first_spawn},
             {"melee_count", c.wave.melee_count},
             {"ranged_count", c.wave.ranged_count},
             {"spawn_spacing", c.wave.spawn_spacing}}},
           {"tick", {{"dt", c.dt}, {"time_cap", c.time_cap}}},
           {"agent", agent},
           {"grid", {{"resolution", c.grid_resolution}}},
           {"profiles", profiles},
           {"seed", c.seed}};
    return j.dump(2) + "\n";
}

}  // namespace lanecraft
