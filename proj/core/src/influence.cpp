#include "lanecraft/influence.hpp"

#include <algorithm>
#include <cmath>

namespace lanecraft {

double tau(WorldPos unit_pos, WorldPos cell_pos, WorldPos base_pos, double denominator_floor) {
    const double d_tb = distance(unit_pos, base_pos);
    const double d_pb = std::max(distance(cell_pos, base_pos), denominator_floor);
    return d_tb / d_pb;
}

double epsilon_radius(const TowerView& tower, const AgentView& agent) {
    const double tower_dps = tower.damage / tower.attack_period;
    const double eps = tower.range - agent.hp * agent.move_speed / (2.0 * tower_dps);
    return std::clamp(eps, 0.0, tower.range);
}

double enemy_tower_influence(WorldPos cell, const TowerView& tower, const AgentView& agent,
                             WorldPos base_pos, double delta, double denominator_floor) {
    const double d_pt = distance(cell, tower.pos);
    const bool favorable =
        tower.ctx.state != TowerAggro::ActiveAggro && tower.ctx.alpha >= 3;
    if (favorable) {
        const double hero_range = agent.attack_range;
        if (d_pt < hero_range - delta) return d_pt;
        if (d_pt <= hero_range) return tau(tower.pos, cell, base_pos, denominator_floor) * d_pt;
        return tower.range - d_pt;
    }
    const double eps = epsilon_radius(tower, agent);
    if (d_pt > eps) return -tower.range;
    return kForbidden;
}

std::optional<double> enemy_creep_influence(WorldPos cell, const CreepView& creep,
                                            double hero_range, WorldPos base_pos, double delta,
                                            const InfluenceTuning& tuning) {
    const double d_pm = distance(cell, creep.pos);
    const double falloff =
        tuning.enemy_creep_falloff_enabled ? tuning.creep_falloff_extent : 0.0;
    if (d_pm > hero_range + falloff) return std::nullopt;

    if (d_pm < hero_range - delta) return d_pm;

    const double phi =
        tuning.phi_enabled ? 100.0 * (creep.hp / creep.max_hp) : 100.0;
    const double t = tau(creep.pos, cell, base_pos, tuning.tau_denominator_floor);
    if (d_pm <= hero_range) return t * (d_pm + tuning.creep_bonus - phi);

    // Past hero range the ring weight decays linearly so far-away dying
    // creeps still pull the agent toward them. Capped at the ring's inner
    // edge value: a sampled in-range cell must always outbid the tail, or a
    // coarse grid can park the agent just outside its own attack range.
    const double ring_edge = t * (hero_range + tuning.creep_bonus - phi);
    const double inner_edge = t * (hero_range - delta + tuning.creep_bonus - phi);
    return std::max(0.0, std::min(ring_edge - (d_pm - hero_range), inner_edge));
}

std::optional<double> ally_tower_influence(WorldPos cell, const TowerView& tower, double margin) {
    const double d_pt = distance(cell, tower.pos);
    if (d_pt > tower.range || d_pt <= margin) return std::nullopt;
    return tower.range - d_pt;
}

std::optional<double> enemy_hero_influence(WorldPos cell, const HeroView& hero) {
    if (distance(cell, hero.pos) > hero.effective_range) return std::nullopt;
    return -hero.tactical_value;
}

std::optional<double> ally_hero_influence(WorldPos cell, const HeroView& hero) {
    if (distance(cell, hero.pos) > hero.effective_range) return std::nullopt;
    return hero.tactical_value;
}

double resolve_hero_range(const FeatureView& view, const InfluenceTuning& tuning) {
    return tuning.hero_range_override.value_or(view.agent.attack_range);
}

InfluenceGrid compose(const FeatureView& view, const GridSpec& spec,
                      const InfluenceTuning& tuning, CreepCombine creep_combine) {
    InfluenceGrid grid(spec);  // zero-valued map each iteration
    const double delta = spec.delta();
    const double hero_range = resolve_hero_range(view, tuning);

    // Pass 1: enemy creeps.
    const double creep_reach =
        hero_range + (tuning.enemy_creep_falloff_enabled ? tuning.creep_falloff_extent : 0.0);
    for (const CreepView& creep : view.enemy_creeps) {
        for_cells_in_radius(spec, creep.pos, creep_reach, [&](CellIndex idx, WorldPos p) {
            const auto w = enemy_creep_influence(p, creep, hero_range, view.agent_base, delta,
                                                 tuning);
            if (!w) return;
            double& cell = grid.at(idx);
            if (creep_combine == CreepCombine::Max) {
                cell = std::max(cell, *w);
            } else {
                cell += *w;
            }
        });
    }

    // Pass 2: towers overwrite whatever the creeps wrote. The first tower to
    // touch a cell rebases it (ally baseline 0, enemy takes its own value);
    // after that allies max-combine and any enemy value combines by min so
    // hostile zones win over everything else.
    std::vector<std::uint8_t> tower_touched(static_cast<std::size_t>(spec.cell_count()), 0);
    for (const TowerView& tower : view.ally_towers) {
        for_cells_in_radius(spec, tower.pos, tower.range, [&](CellIndex idx, WorldPos p) {
            double& cell = grid.at(idx);
            if (!tower_touched[spec.flat(idx)]) {
                tower_touched[spec.flat(idx)] = 1;
                cell = 0.0;
            }
            if (const auto w = ally_tower_influence(p, tower, tuning.ally_tower_margin)) {
                cell = std::max(cell, *w);
            }
        });
    }
    for (const TowerView& tower : view.enemy_towers) {
        for_cells_in_radius(spec, tower.pos, tower.range, [&](CellIndex idx, WorldPos p) {
            const double w = enemy_tower_influence(p, tower, view.agent, view.agent_base, delta,
                                                   tuning.tau_denominator_floor);
            double& cell = grid.at(idx);
            if (!tower_touched[spec.flat(idx)]) {
                tower_touched[spec.flat(idx)] = 1;
                cell = w;
            } else {
                cell = std::min(cell, w);
            }
        });
    }

    // Pass 3: heroes. Enemy plateaus overwrite (overlaps resolve to the most
    // dangerous value), then ally values add. Forbidden cells stay forbidden.
    std::vector<std::uint8_t> plateau(static_cast<std::size_t>(spec.cell_count()), 0);
    for (const HeroView& hero : view.enemy_heroes) {
        for_cells_in_radius(spec, hero.pos, hero.effective_range, [&](CellIndex idx, WorldPos p) {
            const auto w = enemy_hero_influence(p, hero);
            if (!w) return;
            double& cell = grid.at(idx);
            if (cell == kForbidden) return;
            if (!plateau[spec.flat(idx)]) {
                plateau[spec.flat(idx)] = 1;
                cell = *w;
            } else {
                cell = std::min(cell, *w);
            }
        });
    }
    for (const HeroView& hero : view.ally_heroes) {
        for_cells_in_radius(spec, hero.pos, hero.effective_range, [&](CellIndex idx, WorldPos p) {
            const auto w = ally_hero_influence(p, hero);
            if (!w) return;
            double& cell = grid.at(idx);
            if (cell == kForbidden) return;
            cell += *w;
        });
    }

    return grid;
}

}  // namespace lanecraft
