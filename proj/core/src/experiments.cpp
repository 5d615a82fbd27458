#include "lanecraft/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "lanecraft/replay.hpp"

namespace lanecraft {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kMeleeAttackRange = 150.0;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Unit hero_template(const MatchConfig& config, const std::string& profile_name) {
    const HeroProfile* profile = config.profiles.find(profile_name);
    Unit hero;
    hero.kind = UnitKind::Hero;
    hero.hp = hero.max_hp = config.hero.hp;
    hero.attack_damage = config.hero.attack_damage;
    hero.attack_period = config.hero.attack_period;
    hero.windup = config.hero.windup;
    hero.range = (profile && profile->is_melee) ? kMeleeAttackRange : config.hero.range;
    hero.move_speed = config.hero.move_speed;
    hero.aggro_radius = 0.0;
    hero.profile = profile_name;
    return hero;
}

void run_indexed(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
    jobs = std::min(jobs, n);
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Hostile towers must never see the agent's cell inside their epsilon zone.
bool in_epsilon_zone(const FeatureView& view, const GridSpec& spec) {
    const CellIndex cell = world_to_cell(view.agent.pos, spec);
    const WorldPos center = cell_center(cell, spec);
    for (const TowerView& tower : view.enemy_towers) {
        const bool hostile =
            tower.ctx.state == TowerAggro::ActiveAggro || tower.ctx.alpha < 3;
        if (!hostile) continue;
        if (distance(center, tower.pos) <= epsilon_radius(tower, view.agent)) return true;
    }
    return false;
}

double mean_of(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double stddev_of(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

const char* team_name(Team t) { return t == Team::Blue ? "Blue" : "Red"; }

ordered_json stats_json(const MatchStats& s) {
    ordered_json j;
    j["seed"] = s.seed;
    j["profile"] = s.profile;
    if (s.winner) {
        j["winner"] = team_name(*s.winner);
    } else {
        j["winner"] = nullptr;
    }
    j["duration_seconds"] = s.duration;
    j["kills"] = s.kills;
    j["deaths"] = s.deaths;
    j["assists"] = s.assists;
    j["last_hits"] = s.last_hits;
    j["cpm"] = s.cpm;
    char hash_buf[24];
    std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                  static_cast<unsigned long long>(s.replay_hash));
    j["replay_hash"] = hash_buf;
    j["replay_events"] = s.replay_events;
    j["safety_violations"] = s.safety_violations;
    return j;
}

MatchStats stats_from(const ordered_json& j) {
    MatchStats s;
    s.seed = j.at("seed").get<std::uint64_t>();
    s.profile = j.at("profile").get<std::string>();
    if (!j.at("winner").is_null()) {
        s.winner = j.at("winner").get<std::string>() == "Blue" ? Team::Blue : Team::Red;
    }
    s.duration = j.at("duration_seconds").get<double>();
    s.kills = j.at("kills").get<int>();
    s.deaths = j.at("deaths").get<int>();
    s.assists = j.at("assists").get<int>();
    s.last_hits = j.at("last_hits").get<int>();
    s.cpm = j.at("cpm").get<double>();
    s.replay_hash = std::stoull(j.at("replay_hash").get<std::string>(), nullptr, 16);
    s.replay_events = j.at("replay_events").get<std::size_t>();
    s.safety_violations = j.at("safety_violations").get<int>();
    return s;
}

}  // namespace

WorldState build_lane_world(const MatchConfig& config, std::uint64_t seed) {
    WorldState world;
    world.map = {config.map_width, config.map_height};
    world.dt = config.dt;
    world.time_cap = config.time_cap;
    world.rng_seed = seed;
    world.wave = config.wave;
    world.next_spawn_time = config.wave.first_spawn;

    auto creep_template = [](const UnitStatsConfig& s, UnitKind kind) {
        Unit u;
        u.kind = kind;
        u.hp = u.max_hp = s.hp;
        u.attack_damage = s.attack_damage;
        u.attack_period = s.attack_period;
        u.windup = s.windup;
        u.range = s.range;
        u.move_speed = s.move_speed;
        u.aggro_radius = s.aggro_radius;
        u.hero_aggro_radius = s.hero_aggro_radius;
        return u;
    };
    world.melee_template = creep_template(config.melee_creep, UnitKind::MeleeCreep);
    world.ranged_template = creep_template(config.ranged_creep, UnitKind::RangedCreep);

    world.base_pos = {WorldPos{config.base_x_blue, config.lane_y},
                      WorldPos{config.base_x_red, config.lane_y}};
    world.hero_spawn = {WorldPos{config.hero_spawn_x_blue, config.lane_y},
                        WorldPos{config.hero_spawn_x_red, config.lane_y}};
    world.lane_waypoints[team_index(Team::Blue)] = {world.base_pos[team_index(Team::Red)]};
    world.lane_waypoints[team_index(Team::Red)] = {world.base_pos[team_index(Team::Blue)]};

    world.nexus[team_index(Team::Blue)] =
        Nexus{1, Team::Blue, world.base_pos[0], config.nexus_hp, config.nexus_hp, true};
    world.nexus[team_index(Team::Red)] =
        Nexus{2, Team::Red, world.base_pos[1], config.nexus_hp, config.nexus_hp, true};

    EntityId tower_id = 10;
    auto add_towers = [&](Team team, const std::vector<double>& xs) {
        for (double x : xs) {
            Tower t;
            t.id = tower_id++;
            t.team = team;
            t.pos = {x, config.lane_y};
            t.hp = t.max_hp = config.tower_hp;
            t.damage = config.tower_damage;
            t.attack_period = config.tower_attack_period;
            t.range = config.tower_range;
            t.retarget_delay = config.tower_retarget_delay;
            world.towers.push_back(t);
        }
    };
    add_towers(Team::Blue, config.tower_x_blue);
    add_towers(Team::Red, config.tower_x_red);
    return world;
}

std::string pick_agent_profile(const MatchConfig& config, std::uint64_t seed) {
    if (config.agent_profile != "random") return config.agent_profile;
    std::vector<const HeroProfile*> ranged;
    for (const HeroProfile& p : config.profiles.profiles) {
        if (!p.is_melee) ranged.push_back(&p);
    }
    if (ranged.empty()) return config.profiles.profiles.front().name;
    return ranged[mix64(seed) % ranged.size()]->name;
}

MatchStats run_match(const MatchConfig& config, std::uint64_t seed,
                     const std::string& replay_path) {
    WorldState world = build_lane_world(config, seed);
    const std::string profile = pick_agent_profile(config, seed);
    const EntityId hero_id =
        world.spawn_hero(Team::Blue, world.hero_spawn[team_index(Team::Blue)],
                         hero_template(config, profile))
            .id;

    AgentState agent;
    agent.hero_id = hero_id;
    agent.tuning = config.tuning;
    agent.latency = config.latency;
    agent.turn_time = config.turn_time;
    agent.im_rate = config.im_rate;
    agent.decision_horizon = config.decision_horizon;

    const GridSpec spec = GridSpec::for_map(world.map, config.grid_resolution);
    ReplayWriter replay;
    int safety_violations = 0;

    while (!world.finished) {
        std::map<EntityId, Command> commands;
        const Unit* hero = world.find_unit(hero_id);
        if (hero && hero->alive) {
            const FeatureView view = build_feature_view(world, hero_id, config.profiles);
            commands[hero_id] = decide(view, spec, agent, world.clock);
            if (in_epsilon_zone(view, spec)) safety_violations += 1;
        }
        replay.add_all(step(world, commands));
    }

    MatchStats stats;
    stats.seed = seed;
    stats.profile = profile;
    stats.winner = world.winner;
    stats.duration = world.clock;
    const HeroStats& hs = world.hero_stats.at(hero_id);
    stats.kills = hs.kills;
    stats.deaths = hs.deaths;
    stats.assists = hs.assists;
    stats.last_hits = hs.last_hits;
    stats.cpm = stats.duration > 0.0 ? hs.last_hits / (stats.duration / 60.0) : 0.0;
    stats.replay_hash = replay.hash();
    stats.replay_events = replay.event_count();
    stats.safety_violations = safety_violations;

    if (!replay_path.empty()) replay.write_file(replay_path);
    return stats;
}

double creeps_per_minute(const MatchStats& stats) {
    if (stats.duration <= 0.0) {
        throw std::invalid_argument("creeps_per_minute: duration must be positive");
    }
    return stats.last_hits / (stats.duration / 60.0);
}

SoloSummary summarize_solo(std::vector<MatchStats> matches) {
    std::sort(matches.begin(), matches.end(),
              [](const MatchStats& a, const MatchStats& b) { return a.seed < b.seed; });
    SoloSummary summary;
    summary.n = static_cast<int>(matches.size());
    std::vector<double> durations;
    std::vector<double> cpms;
    for (const MatchStats& m : matches) {
        if (m.winner == Team::Blue) summary.wins += 1;
        summary.total_deaths += m.deaths;
        summary.total_safety_violations += m.safety_violations;
        durations.push_back(m.duration);
        cpms.push_back(m.cpm);
    }
    summary.mean_duration = mean_of(durations);
    summary.stddev_duration = stddev_of(durations, summary.mean_duration);
    summary.mean_cpm = mean_of(cpms);
    summary.matches = std::move(matches);
    return summary;
}

SoloSummary run_solo_win_suite(const MatchConfig& config, int n, std::uint64_t base_seed,
                               int jobs, const std::string& replay_dir) {
    std::vector<MatchStats> matches(static_cast<std::size_t>(n));
    run_indexed(n, jobs, [&](int i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        std::string path;
        if (!replay_dir.empty()) {
            path = replay_dir + "/solo_seed_" + std::to_string(seed) + ".jsonl";
        }
        matches[static_cast<std::size_t>(i)] = run_match(config, seed, path);
    });
    return summarize_solo(std::move(matches));
}

double AblationReport::ratio() const {
    if (mean_cpm_off <= 0.0) return std::numeric_limits<double>::infinity();
    return mean_cpm_on / mean_cpm_off;
}

AblationReport summarize_ablation(std::vector<MatchStats> phi_on,
                                  std::vector<MatchStats> phi_off) {
    auto by_seed = [](const MatchStats& a, const MatchStats& b) { return a.seed < b.seed; };
    std::sort(phi_on.begin(), phi_on.end(), by_seed);
    std::sort(phi_off.begin(), phi_off.end(), by_seed);
    AblationReport report;
    std::vector<double> on_cpms, off_cpms;
    for (const MatchStats& m : phi_on) on_cpms.push_back(m.cpm);
    for (const MatchStats& m : phi_off) off_cpms.push_back(m.cpm);
    report.mean_cpm_on = mean_of(on_cpms);
    report.mean_cpm_off = mean_of(off_cpms);
    report.efficiency_on = report.mean_cpm_on / kBaselineCpm * 100.0;
    report.efficiency_off = report.mean_cpm_off / kBaselineCpm * 100.0;
    report.phi_on = std::move(phi_on);
    report.phi_off = std::move(phi_off);
    return report;
}

AblationReport run_farm_ablation(const MatchConfig& config, int n_per_arm,
                                 std::uint64_t base_seed, int jobs) {
    MatchConfig on_config = config;
    on_config.tuning.phi_enabled = true;
    MatchConfig off_config = config;
    off_config.tuning.phi_enabled = false;

    std::vector<MatchStats> on(static_cast<std::size_t>(n_per_arm));
    std::vector<MatchStats> off(static_cast<std::size_t>(n_per_arm));
    run_indexed(2 * n_per_arm, jobs, [&](int i) {
        const bool is_on = i < n_per_arm;
        const int k = is_on ? i : i - n_per_arm;
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(k);
        (is_on ? on : off)[static_cast<std::size_t>(k)] =
            run_match(is_on ? on_config : off_config, seed);
    });
    return summarize_ablation(std::move(on), std::move(off));
}

KitingReport run_kiting_duel(const MatchConfig& config, double duration_seconds) {
    MatchConfig duel = config;
    duel.wave.melee_count = 0;
    duel.wave.ranged_count = 0;
    duel.time_cap = duration_seconds;

    // Standard map, no creeps: the agent kites toward its own towers the way
    // a pressured laner retreats.
    WorldState world = build_lane_world(duel, 1);

    // Melee pursuer: equal move speed, short reach, committed swings. Bulky
    // enough that the duel runs the full observation window. Spawned first so
    // it acts before the agent each tick.
    Unit pursuer_tmpl = hero_template(duel, "melee_bruiser");
    pursuer_tmpl.range = kMeleeAttackRange;
    pursuer_tmpl.windup = 0.8;
    pursuer_tmpl.attack_period = 0.85;
    pursuer_tmpl.attack_damage = 60.0;
    pursuer_tmpl.hp = pursuer_tmpl.max_hp = 60000.0;
    const EntityId pursuer_id =
        world.spawn_hero(Team::Red, {duel.hero_spawn_x_blue + 1500.0, duel.lane_y},
                         pursuer_tmpl)
            .id;

    const EntityId agent_id =
        world
            .spawn_hero(Team::Blue, {duel.hero_spawn_x_blue, duel.lane_y},
                        hero_template(duel, "ranged_carry"))
            .id;

    // The chaser re-reads the agent's position on a bot-like decision cadence
    // and swings whenever its target comes into reach. The orbwalker's edge
    // over it is exactly its faster reaction.
    const std::int64_t chase_refresh_ticks =
        std::max<std::int64_t>(1, std::llround(1.2 / world.dt));

    AgentState agent;
    agent.hero_id = agent_id;
    agent.tuning = duel.tuning;
    agent.latency = duel.latency;
    agent.turn_time = duel.turn_time;
    agent.im_rate = duel.im_rate;
    agent.decision_horizon = duel.decision_horizon;
    const GridSpec spec = GridSpec::for_map(world.map, duel.grid_resolution);

    struct TickSample {
        bool attack = false;
        bool move = false;
        bool separated = false;
    };
    std::vector<TickSample> ticks;
    std::int64_t contact_tick = -1;
    WorldPos chase_point{duel.hero_spawn_x_blue, duel.lane_y};

    while (!world.finished) {
        std::map<EntityId, Command> commands;
        const Unit* agent_unit = world.find_unit(agent_id);
        const Unit* pursuer_unit = world.find_unit(pursuer_id);

        TickSample sample;
        if (agent_unit && agent_unit->alive) {
            const FeatureView view = build_feature_view(world, agent_id, duel.profiles);
            const Command cmd = decide(view, spec, agent, world.clock);
            commands[agent_id] = cmd;
            sample.attack = cmd.kind == Command::Kind::Attack;
            sample.move = cmd.kind == Command::Kind::Move;
        }
        if (pursuer_unit && pursuer_unit->alive && agent_unit && agent_unit->alive) {
            if (world.tick_index % chase_refresh_ticks == 0) chase_point = agent_unit->pos;
            if (world.tick_index == 0 ||
                distance(pursuer_unit->pos, agent_unit->pos) <= kMeleeAttackRange + 10.0) {
                commands[pursuer_id] = Command::attack(agent_id);
            } else {
                commands[pursuer_id] = Command::move(chase_point);
            }
        }
        step(world, commands);

        agent_unit = world.find_unit(agent_id);
        pursuer_unit = world.find_unit(pursuer_id);
        if (agent_unit && pursuer_unit) {
            const double gap = distance(agent_unit->pos, pursuer_unit->pos);
            sample.separated = gap >= 200.0;
            if (contact_tick < 0 && gap <= agent_unit->range) {
                contact_tick = static_cast<std::int64_t>(ticks.size());
            }
        }
        ticks.push_back(sample);
    }

    KitingReport report;
    report.duel_duration = world.clock;
    report.agent_deaths = world.hero_stats.at(agent_id).deaths;
    if (contact_tick < 0) return report;
    report.contact_made = true;
    report.contact_time = static_cast<double>(contact_tick) * world.dt;

    const std::size_t window = static_cast<std::size_t>(std::llround(10.0 / world.dt));
    const std::size_t first = static_cast<std::size_t>(contact_tick);
    if (ticks.size() < first + window) return report;

    // Prefix sums over the post-contact samples for sliding-window stats.
    const std::size_t n = ticks.size();
    std::vector<int> attacks(n + 1, 0), moves(n + 1, 0), separated(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        attacks[i + 1] = attacks[i] + (ticks[i].attack ? 1 : 0);
        moves[i + 1] = moves[i] + (ticks[i].move ? 1 : 0);
        separated[i + 1] = separated[i] + (ticks[i].separated ? 1 : 0);
    }
    report.min_attacks = std::numeric_limits<int>::max();
    report.min_moves = std::numeric_limits<int>::max();
    report.min_separation_fraction = 1.0;
    for (std::size_t s = first; s + window <= n; ++s) {
        const int a = attacks[s + window] - attacks[s];
        const int m = moves[s + window] - moves[s];
        const double frac =
            static_cast<double>(separated[s + window] - separated[s]) /
            static_cast<double>(window);
        report.min_attacks = std::min(report.min_attacks, a);
        report.min_moves = std::min(report.min_moves, m);
        report.min_separation_fraction = std::min(report.min_separation_fraction, frac);
        report.windows += 1;
    }
    return report;
}

std::string match_stats_to_json(const MatchStats& stats) {
    return stats_json(stats).dump(2) + "\n";
}

MatchStats match_stats_from_json(const std::string& json_text) {
    return stats_from(ordered_json::parse(json_text));
}

std::string solo_summary_to_json(const SoloSummary& summary) {
    ordered_json j;
    j["n"] = summary.n;
    j["wins"] = summary.wins;
    j["total_deaths"] = summary.total_deaths;
    j["total_safety_violations"] = summary.total_safety_violations;
    j["mean_duration_seconds"] = summary.mean_duration;
    j["stddev_duration_seconds"] = summary.stddev_duration;
    j["mean_cpm"] = summary.mean_cpm;
    j["reference"] = {{"mean_minutes", kReferenceSoloMeanMinutes},
                      {"stddev_minutes", kReferenceSoloStddevMinutes},
                      {"deaths", 0}};
    ordered_json matches = ordered_json::array();
    for (const MatchStats& m : summary.matches) matches.push_back(stats_json(m));
    j["matches"] = matches;
    return j.dump(2) + "\n";
}

std::string solo_summary_to_text(const SoloSummary& summary) {
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf), "solo win suite: %d matches\n", summary.n);
    out += buf;
    std::snprintf(buf, sizeof(buf), "  wins: %d/%d  deaths: %d  safety violations: %d\n",
                  summary.wins, summary.n, summary.total_deaths,
                  summary.total_safety_violations);
    out += buf;
    std::snprintf(buf, sizeof(buf), "  duration: mean %.2f min, stddev %.2f min\n",
                  summary.mean_duration / 60.0, summary.stddev_duration / 60.0);
    out += buf;
    std::snprintf(buf, sizeof(buf), "  mean creep score: %.3f per minute\n", summary.mean_cpm);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "  reference (LoL testbed): %.1f +/- %.1f min, 0 deaths\n",
                  kReferenceSoloMeanMinutes, kReferenceSoloStddevMinutes);
    out += buf;
    out += "  seed      profile        winner  minutes  last_hits  cpm\n";
    for (const MatchStats& m : summary.matches) {
        std::snprintf(buf, sizeof(buf), "  %-8llu  %-13s  %-6s  %7.2f  %9d  %6.3f\n",
                      static_cast<unsigned long long>(m.seed), m.profile.c_str(),
                      m.winner ? team_name(*m.winner) : "none", m.duration / 60.0,
                      m.last_hits, m.cpm);
        out += buf;
    }
    return out;
}

std::string ablation_to_json(const AblationReport& report) {
    ordered_json j;
    j["mean_cpm_on"] = report.mean_cpm_on;
    j["mean_cpm_off"] = report.mean_cpm_off;
    j["efficiency_on_percent"] = report.efficiency_on;
    j["efficiency_off_percent"] = report.efficiency_off;
    j["ratio_on_off"] = report.ratio();
    j["baseline_cpm"] = kBaselineCpm;
    j["reference"] = {{"cpm_on", kReferenceCpmPhiOn},
                      {"cpm_off", kReferenceCpmPhiOff},
                      {"efficiency_on_percent", 92.24},
                      {"efficiency_off_percent", 60.84}};
    ordered_json on = ordered_json::array();
    for (const MatchStats& m : report.phi_on) on.push_back(stats_json(m));
    ordered_json off = ordered_json::array();
    for (const MatchStats& m : report.phi_off) off.push_back(stats_json(m));
    j["phi_on"] = on;
    j["phi_off"] = off;
    return j.dump(2) + "\n";
}

std::string ablation_to_text(const AblationReport& report) {
    char buf[256];
    std::string out = "resource collection (creep score per minute)\n";
    out += "  method            cpm      efficiency\n";
    std::snprintf(buf, sizeof(buf), "  %-16s  %7.3f  %6.2f%%\n", "baseline", kBaselineCpm,
                  100.0);
    out += buf;
    std::snprintf(buf, sizeof(buf), "  %-16s  %7.3f  %6.2f%%\n", "phi disabled",
                  report.mean_cpm_off, report.efficiency_off);
    out += buf;
    std::snprintf(buf, sizeof(buf), "  %-16s  %7.3f  %6.2f%%\n", "phi enabled",
                  report.mean_cpm_on, report.efficiency_on);
    out += buf;
    std::snprintf(buf, sizeof(buf), "  ratio on/off: %.3f\n", report.ratio());
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "  reference (LoL testbed): enabled %.3f (%.2f%%), disabled %.3f (%.2f%%)\n",
                  kReferenceCpmPhiOn, 92.24, kReferenceCpmPhiOff, 60.84);
    out += buf;
    return out;
}

std::vector<std::string> heatmap_scene_names() {
    return {"enemy-tower-passive", "enemy-creeps", "max-vs-sum", "full-compose", "empty"};
}

namespace {

// Small square patch with the base on the left edge so the base-distance
// weighting is visible in the exported maps.
HeatmapScene scene_base(const std::string& name) {
    HeatmapScene scene;
    scene.name = name;
    const MapSpec patch{2800.0, 2200.0};
    scene.spec = GridSpec::for_map(patch, 20.0);
    scene.view.agent_base = {100.0, 1100.0};
    scene.view.agent.pos = {600.0, 1100.0};
    scene.view.agent.hp = 600.0;
    scene.view.agent.max_hp = 600.0;
    scene.view.agent.attack_range = 550.0;
    return scene;
}

TowerView scene_tower(WorldPos pos, TowerAggro state, int alpha) {
    TowerView t;
    t.id = 900;
    t.pos = pos;
    t.ctx.state = state;
    t.ctx.alpha = alpha;
    return t;
}

}  // namespace

std::optional<HeatmapScene> make_heatmap_scene(const std::string& name) {
    if (name == "empty") {
        return scene_base(name);
    }
    if (name == "enemy-tower-passive") {
        HeatmapScene scene = scene_base(name);
        scene.view.enemy_towers.push_back(
            scene_tower({1700.0, 1100.0}, TowerAggro::PassiveAggro, 3));
        return scene;
    }
    if (name == "enemy-creeps") {
        HeatmapScene scene = scene_base(name);
        scene.view.enemy_creeps.push_back({901, {1500.0, 1000.0}, 450.0, 450.0});
        scene.view.enemy_creeps.push_back({902, {1800.0, 1250.0}, 90.0, 450.0});
        return scene;
    }
    if (name == "max-vs-sum") {
        // Long tall patch: two dying creeps whose attraction tails overlap
        // mid-lane, with the base far below so the base-distance weighting
        // stays gentle. Summing the tails piles up a hill between the creeps
        // that max-combination never produces. Positions sit off the cell
        // lattice so field symmetries cannot produce ties.
        HeatmapScene scene;
        scene.name = name;
        const MapSpec patch{2800.0, 7000.0};
        scene.spec = GridSpec::for_map(patch, 20.0);
        scene.view.agent_base = {1404.0, 100.0};
        scene.view.agent.pos = {1404.0, 5000.0};
        scene.view.agent.hp = 600.0;
        scene.view.agent.max_hp = 600.0;
        scene.view.agent.attack_range = 550.0;
        scene.view.enemy_creeps.push_back({901, {804.0, 6104.0}, 45.0, 450.0});
        scene.view.enemy_creeps.push_back({902, {2004.0, 6104.0}, 45.0, 450.0});
        scene.sum_variant = true;
        return scene;
    }
    if (name == "full-compose") {
        HeatmapScene scene = scene_base(name);
        scene.view.ally_towers.push_back(scene_tower({700.0, 1100.0}, TowerAggro::Idle, 0));
        scene.view.enemy_towers.push_back(
            scene_tower({2200.0, 1100.0}, TowerAggro::PassiveAggro, 3));
        scene.view.enemy_creeps.push_back({901, {1500.0, 950.0}, 450.0, 450.0});
        scene.view.enemy_creeps.push_back({902, {1650.0, 1200.0}, 120.0, 450.0});
        scene.view.enemy_creeps.push_back({903, {1850.0, 1050.0}, 280.0, 280.0});
        HeroView enemy_hero;
        enemy_hero.id = 910;
        enemy_hero.pos = {2300.0, 1650.0};
        enemy_hero.hp = 600.0;
        enemy_hero.max_hp = 600.0;
        enemy_hero.effective_range = 550.0;
        enemy_hero.tactical_value = 500.0;
        scene.view.enemy_heroes.push_back(enemy_hero);
        HeroView ally_hero = enemy_hero;
        ally_hero.id = 911;
        ally_hero.pos = {1200.0, 900.0};
        ally_hero.tactical_value = 200.0;
        scene.view.ally_heroes.push_back(ally_hero);
        return scene;
    }
    return std::nullopt;
}

}  // namespace lanecraft
