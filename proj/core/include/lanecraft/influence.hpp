// Per-feature influence weights and the priority-ordered composer that turns
// a world snapshot into the tactical grid the navigation layer searches.
//
// Weight conventions: higher is better for the controlled agent. Enemy
// creeps and favorable towers write rings that peak just inside the agent's
// attack range; hostile towers write -T_r over their footprint and the
// forbidden sentinel inside the survivable-damage radius.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lanecraft/geometry.hpp"
#include "lanecraft/grid.hpp"

namespace lanecraft {

using EntityId = std::uint32_t;
inline constexpr EntityId kNoEntity = 0;

struct InfluenceTuning {
    std::optional<double> hero_range_override;  // H_r source when the hero is unprofiled
    bool phi_enabled = true;                    // creep HP term on/off (ablation switch)
    double creep_bonus = 100.0;                 // constant added in the creep ring weight
    // Collision margin around own towers. Wide enough that an empty tower
    // shade never outbids live targets down the lane.
    double ally_tower_margin = 600.0;
    bool enemy_creep_falloff_enabled = true;    // linear attraction beyond hero range
    double creep_falloff_extent = 300.0;        // reach of that attraction past H_r
    double tau_denominator_floor = 100.0;       // keeps the base-distance ratio finite
};

enum class TowerAggro { Idle, PassiveAggro, ActiveAggro };

// Aggro state as seen by the controlled agent, plus the creep-shield count
// (agent-side creeps inside the tower's range).
struct TowerContext {
    TowerAggro state = TowerAggro::Idle;
    int alpha = 0;
};

struct CreepView {
    EntityId id = kNoEntity;
    WorldPos pos;
    double hp = 0.0;
    double max_hp = 1.0;
};

struct TowerView {
    EntityId id = kNoEntity;
    WorldPos pos;
    double range = 775.0;
    double damage = 150.0;
    double attack_period = 1.2;
    TowerContext ctx;  // meaningful for enemy towers
};

struct HeroView {
    EntityId id = kNoEntity;
    WorldPos pos;
    double hp = 0.0;
    double max_hp = 1.0;
    double effective_range = 550.0;  // hand-authored reach, >= auto-attack range
    double tactical_value = 500.0;
    EntityId current_target = kNoEntity;
};

struct NexusView {
    EntityId id = kNoEntity;
    WorldPos pos;
    double hp = 0.0;
    int creep_shield = 0;  // agent-side creeps near the structure
};

struct AgentView {
    EntityId id = kNoEntity;
    WorldPos pos;
    double hp = 0.0;
    double max_hp = 1.0;
    double move_speed = 325.0;
    double attack_range = 550.0;
    double attack_damage = 60.0;
    double attack_period = 1.0 / 0.7;
    double windup = 0.25;
    double last_attack_time = -1e18;
    double attack_lock_until = -1e18;
};

// Immutable world snapshot for one compose call. Ally heroes exclude the
// agent itself; ally creeps carry no influence and are listed for
// bookkeeping only.
struct FeatureView {
    std::vector<CreepView> enemy_creeps;
    std::vector<CreepView> ally_creeps;
    std::vector<TowerView> enemy_towers;
    std::vector<TowerView> ally_towers;
    std::vector<HeroView> enemy_heroes;
    std::vector<HeroView> ally_heroes;
    std::optional<NexusView> enemy_nexus;
    WorldPos agent_base;
    AgentView agent;
};

// Base-relative safety ratio: distance(unit, base) / distance(cell, base),
// with the denominator floored so cells at the base stay finite. > 1 exactly
// when the cell is closer to the base than the unit is.
double tau(WorldPos unit_pos, WorldPos cell_pos, WorldPos base_pos, double denominator_floor);

// Radius inside which expected tower damage over a round trip exceeds the
// agent's current HP: clamp(T_r - hp * move_speed / (2 * tower_dps), 0, T_r).
// Zero for a healthy agent (free to dive), the whole range at zero HP.
double epsilon_radius(const TowerView& tower, const AgentView& agent);

// Weight of one enemy-tower cell; caller guarantees d(cell, tower) <= T_r.
// Favorable branch (Idle/Passive aggro and alpha >= 3) rises to the agent's
// range band then falls toward the rim; hostile branch writes -T_r outside
// epsilon and the forbidden sentinel inside it.
double enemy_tower_influence(WorldPos cell, const TowerView& tower, const AgentView& agent,
                             WorldPos base_pos, double delta, double denominator_floor);

// Weight contribution of one enemy creep, empty outside its footprint
// (H_r + falloff). phi is the creep's remaining HP percent when enabled,
// pinned to 100 otherwise. Callers max-combine contributions per cell.
std::optional<double> enemy_creep_influence(WorldPos cell, const CreepView& creep,
                                            double hero_range, WorldPos base_pos, double delta,
                                            const InfluenceTuning& tuning);

// Linear-decay contribution of an own tower, empty inside the collision
// margin and beyond T_r. Callers max-combine with the current cell value.
std::optional<double> ally_tower_influence(WorldPos cell, const TowerView& tower, double margin);

// Enemy hero: plateau value (-tactical_value) the cell is set to, empty
// outside effective range.
std::optional<double> enemy_hero_influence(WorldPos cell, const HeroView& hero);

// Ally hero: additive delta (+tactical_value), empty outside effective range.
std::optional<double> ally_hero_influence(WorldPos cell, const HeroView& hero);

enum class CreepCombine { Max, Sum };

// Three passes in tactical-value order: creeps (max-combined), towers
// (footprints overwrite creep values; hostile beats favorable, ally/enemy
// overlap resolves to the safer minimum), heroes (enemy plateaus overwrite,
// ally values add; forbidden cells are never touched by hero passes).
// CreepCombine::Sum swaps pass 1's max for a sum; it exists only to
// reproduce the local-maximum comparison and is not used by the agent.
InfluenceGrid compose(const FeatureView& view, const GridSpec& spec,
                      const InfluenceTuning& tuning,
                      CreepCombine creep_combine = CreepCombine::Max);

// Effective hero range feeding the equations: explicit override, else the
// agent's attack range.
double resolve_hero_range(const FeatureView& view, const InfluenceTuning& tuning);

}  // namespace lanecraft
