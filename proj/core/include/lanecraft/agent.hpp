// Two-layer controller: the navigation layer searches the influence grid for
// the best reachable point while the micromanagement layer picks targets and
// times attacks against movement (orbwalking). One Command per tick.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lanecraft/grid.hpp"
#include "lanecraft/influence.hpp"
#include "lanecraft/sim.hpp"

namespace lanecraft {

// Hand-authored knowledge about an archetype: how far its threat reaches
// (may exceed its auto-attack range) and how much map value it projects.
struct HeroProfile {
    std::string name;
    double effective_range = 550.0;
    double tactical_value = 500.0;
    bool is_melee = false;
};

struct ProfileTable {
    std::vector<HeroProfile> profiles;

    const HeroProfile* find(std::string_view name) const;
    // Small archetype set standing in for a full per-hero database.
    static ProfileTable defaults();
};

struct AgentState {
    EntityId hero_id = kNoEntity;
    InfluenceTuning tuning;
    double latency = 0.05;     // network delay folded into the hold window
    double turn_time = 0.0;    // kept configurable; the sim has no facing
    double im_rate = 10.0;     // grid recomputes per second
    // seconds of movement the best-point search covers; wide enough to keep
    // the battle front inside the search disk between engagements
    double decision_horizon = 6.0;

    std::optional<InfluenceGrid> decision_grid;
    double last_compose_time = kNever;
    WorldPos nav_target;
    std::optional<EntityId> current_target;
};

// Snapshot of the world as the agent's sensors see it. Ally heroes exclude
// the controlled hero; enemy tower contexts are computed relative to it.
FeatureView build_feature_view(const WorldState& world, EntityId hero_id,
                               const ProfileTable& profiles);

// Best reachable point: the center of the argmax cell within one decision
// horizon of movement. Never a forbidden cell; if everything reachable is
// forbidden, the candidate nearest the agent's own base (escape home).
WorldPos navigate(const FeatureView& view, const InfluenceGrid& grid, const AgentState& state);

// Preference order within attack range: enemy hero targeting the agent
// (danger first), last-hittable creep, secure structure (creep shield up and
// no enemy hero close), lowest-HP creep. Lowest HP then lowest id break ties.
std::optional<EntityId> select_target(const FeatureView& view, const AgentState& state);

// Attack/move arbitration. Holds through windup + turn time + latency so a
// move order cannot cancel the swing, attacks when the cooldown allows,
// otherwise moves to the navigation target.
Command orbwalk(const AgentState& state, const FeatureView& view,
                std::optional<EntityId> target, WorldPos nav_target, double now);

// Full decision cycle: recompose the grid when the im-rate window lapsed,
// navigate, select a target, orbwalk. Mutates only the cached grid and the
// nav/target bookkeeping in `state`.
Command decide(const FeatureView& view, const GridSpec& spec, AgentState& state, double now);

}  // namespace lanecraft
