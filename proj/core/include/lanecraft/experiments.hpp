// Batch harness: seeded matches, the solo-win suite, the creep-score
// ablation, the kiting duel and the canned heatmap scenes. Matches are
// deterministic per (config, seed); suites fan out over a worker pool and
// aggregate in seed order.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lanecraft/agent.hpp"
#include "lanecraft/config.hpp"
#include "lanecraft/sim.hpp"

namespace lanecraft {

// Reference numbers from the original LoL testbed runs, reported next to
// ours for comparison; absolute values do not transfer across engines.
inline constexpr double kReferenceSoloMeanMinutes = 22.6;
inline constexpr double kReferenceSoloStddevMinutes = 5.0;
inline constexpr double kReferenceCpmPhiOn = 9.224;
inline constexpr double kReferenceCpmPhiOff = 6.084;
inline constexpr double kBaselineCpm = 10.0;  // community best-farm rate = 100%

struct MatchStats {
    std::uint64_t seed = 0;
    std::string profile;
    std::optional<Team> winner;
    double duration = 0.0;  // seconds
    int kills = 0;
    int deaths = 0;
    int assists = 0;
    int last_hits = 0;
    double cpm = 0.0;
    std::uint64_t replay_hash = 0;
    std::size_t replay_events = 0;
    int safety_violations = 0;  // ticks spent in a hostile tower's epsilon zone
};

struct SoloSummary {
    int n = 0;
    int wins = 0;
    int total_deaths = 0;
    int total_safety_violations = 0;
    double mean_duration = 0.0;    // seconds
    double stddev_duration = 0.0;  // seconds
    double mean_cpm = 0.0;
    std::vector<MatchStats> matches;
};

struct AblationReport {
    std::vector<MatchStats> phi_on;
    std::vector<MatchStats> phi_off;
    double mean_cpm_on = 0.0;
    double mean_cpm_off = 0.0;
    double efficiency_on = 0.0;   // percent of the baseline rate
    double efficiency_off = 0.0;

    double ratio() const;
};

struct KitingReport {
    bool contact_made = false;
    double contact_time = 0.0;
    double duel_duration = 0.0;
    int windows = 0;         // sliding 10 s windows evaluated
    int min_attacks = 0;     // fewest agent attack commands in any window
    int min_moves = 0;       // fewest agent move commands in any window
    double min_separation_fraction = 0.0;  // worst share of ticks with gap >= 200
    int agent_deaths = 0;

    bool passes() const {
        return contact_made && windows > 0 && min_attacks >= 3 && min_moves >= 10 &&
               min_separation_fraction >= 0.8 && agent_deaths == 0;
    }
};

// Lane world with towers, bases and waypoints; no heroes yet.
WorldState build_lane_world(const MatchConfig& config, std::uint64_t seed);

// Archetype for this seed: the configured profile, or a seed-picked ranged
// archetype when the config says "random".
std::string pick_agent_profile(const MatchConfig& config, std::uint64_t seed);

// One full solo match (agent vs. creeps and towers, no enemy hero). Writes
// the replay to `replay_path` when non-empty.
MatchStats run_match(const MatchConfig& config, std::uint64_t seed,
                     const std::string& replay_path = "");

// n solo matches over seeds base_seed .. base_seed+n-1.
SoloSummary run_solo_win_suite(const MatchConfig& config, int n, std::uint64_t base_seed,
                               int jobs = 0, const std::string& replay_dir = "");

// Seed-paired arms: identical seeds, only the creep-HP term differs.
AblationReport run_farm_ablation(const MatchConfig& config, int n_per_arm,
                                 std::uint64_t base_seed, int jobs = 0);

// Duel against a melee pursuer with equal move speed on an empty lane.
KitingReport run_kiting_duel(const MatchConfig& config, double duration_seconds = 70.0);

// last_hits per minute; duration must be positive.
double creeps_per_minute(const MatchStats& stats);

SoloSummary summarize_solo(std::vector<MatchStats> matches);
AblationReport summarize_ablation(std::vector<MatchStats> phi_on, std::vector<MatchStats> phi_off);

// Report serialization (machine + human forms).
std::string match_stats_to_json(const MatchStats& stats);
MatchStats match_stats_from_json(const std::string& json_text);
std::string solo_summary_to_json(const SoloSummary& summary);
std::string solo_summary_to_text(const SoloSummary& summary);
std::string ablation_to_json(const AblationReport& report);
std::string ablation_to_text(const AblationReport& report);

// Canned scenes for heatmap export; `sum_variant` additionally renders the
// creep pass with sum-combination for the local-maximum comparison.
struct HeatmapScene {
    std::string name;
    FeatureView view;
    GridSpec spec;
    InfluenceTuning tuning;
    bool sum_variant = false;
};

std::vector<std::string> heatmap_scene_names();
std::optional<HeatmapScene> make_heatmap_scene(const std::string& name);

}  // namespace lanecraft
