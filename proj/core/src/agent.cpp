#include "lanecraft/agent.hpp"

#include <algorithm>
#include <cmath>

namespace lanecraft {

namespace {

constexpr double kTimeEps = 1e-7;
constexpr double kDefaultTacticalValue = 400.0;

// Creep-shield radius used when judging a push on the nexus, which has no
// attack range of its own.
constexpr double kStructureShieldRadius = 775.0;

}  // namespace

const HeroProfile* ProfileTable::find(std::string_view name) const {
    for (const HeroProfile& p : profiles) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

ProfileTable ProfileTable::defaults() {
    ProfileTable table;
    table.profiles = {
        {"ranged_carry", 550.0, 500.0, false},
        {"mage", 650.0, 450.0, false},
        // short auto-attack reach but a long threat radius: gap-closer kit
        {"melee_bruiser", 650.0, 400.0, true},
    };
    return table;
}

FeatureView build_feature_view(const WorldState& world, EntityId hero_id,
                               const ProfileTable& profiles) {
    FeatureView view;
    const Unit* hero = world.find_unit(hero_id);
    if (!hero) return view;

    const Team team = hero->team;
    view.agent_base = world.base_pos[team_index(team)];
    view.agent = {hero->id,           hero->pos,      hero->hp,
                  hero->max_hp,       hero->move_speed, hero->range,
                  hero->attack_damage, hero->attack_period, hero->windup,
                  hero->last_attack_time, hero->attack_lock_until};

    for (const Unit& u : world.units) {
        if (!u.alive || u.id == hero_id) continue;
        if (u.kind == UnitKind::Hero) {
            const HeroProfile* profile = profiles.find(u.profile);
            HeroView hv;
            hv.id = u.id;
            hv.pos = u.pos;
            hv.hp = u.hp;
            hv.max_hp = u.max_hp;
            hv.effective_range =
                profile ? std::max(profile->effective_range, u.range) : u.range;
            hv.tactical_value = profile ? profile->tactical_value : kDefaultTacticalValue;
            hv.current_target = u.current_target;
            (u.team == team ? view.ally_heroes : view.enemy_heroes).push_back(hv);
        } else {
            CreepView cv{u.id, u.pos, u.hp, u.max_hp};
            (u.team == team ? view.ally_creeps : view.enemy_creeps).push_back(cv);
        }
    }

    for (const Tower& t : world.towers) {
        if (!t.alive) continue;
        TowerView tv;
        tv.id = t.id;
        tv.pos = t.pos;
        tv.range = t.range;
        tv.damage = t.damage;
        tv.attack_period = t.attack_period;
        if (t.team == team) {
            view.ally_towers.push_back(tv);
            continue;
        }
        if (t.locked_target == kNoEntity) {
            tv.ctx.state = TowerAggro::Idle;
        } else if (t.locked_target == hero_id) {
            tv.ctx.state = TowerAggro::ActiveAggro;
        } else {
            tv.ctx.state = TowerAggro::PassiveAggro;
        }
        int alpha = 0;
        for (const Unit& u : world.units) {
            if (u.alive && u.team == team && u.kind != UnitKind::Hero &&
                distance(u.pos, t.pos) <= t.range) {
                alpha += 1;
            }
        }
        tv.ctx.alpha = alpha;
        view.enemy_towers.push_back(tv);
    }

    const Nexus& enemy_nexus = world.nexus_of(opponent(team));
    if (enemy_nexus.alive) {
        NexusView nv;
        nv.id = enemy_nexus.id;
        nv.pos = enemy_nexus.pos;
        nv.hp = enemy_nexus.hp;
        for (const Unit& u : world.units) {
            if (u.alive && u.team == team && u.kind != UnitKind::Hero &&
                distance(u.pos, enemy_nexus.pos) <= kStructureShieldRadius) {
                nv.creep_shield += 1;
            }
        }
        view.enemy_nexus = nv;
    }

    return view;
}

namespace {

// The walked path must honor the same no-dive rule as the chosen cell, so a
// candidate only qualifies when the straight segment to it never crosses a
// danger cell. Sampled at half-resolution steps.
bool path_stays_safe(const InfluenceGrid& grid, WorldPos from, WorldPos to) {
    const double length = distance(from, to);
    const double step = grid.spec.resolution / 2.0;
    const int samples = std::max(1, static_cast<int>(std::ceil(length / step)));
    for (int i = 1; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        const WorldPos p{from.x + (to.x - from.x) * t, from.y + (to.y - from.y) * t};
        if (grid.at(world_to_cell(p, grid.spec)) < 0.0) return false;
    }
    return true;
}

}  // namespace

WorldPos navigate(const FeatureView& view, const InfluenceGrid& grid, const AgentState& state) {
    const double radius = view.agent.move_speed * state.decision_horizon;
    const WorldPos here = view.agent.pos;

    struct Candidate {
        CellIndex idx;
        WorldPos center;
        double value;
        double dist2;
    };
    std::vector<Candidate> candidates;
    for_cells_in_radius(grid.spec, here, radius, [&](CellIndex idx, WorldPos p) {
        const double dx = p.x - here.x;
        const double dy = p.y - here.y;
        candidates.push_back({idx, p, grid.at(idx), dx * dx + dy * dy});
    });
    if (candidates.empty()) return here;

    if (grid.at(world_to_cell(here, grid.spec)) < 0.0) {
        // Standing in modeled danger: leave by the shortest route to any
        // safe cell, value notwithstanding.
        const Candidate* exit_cell = nullptr;
        for (const Candidate& c : candidates) {
            if (c.value < 0.0) continue;
            if (!exit_cell || c.dist2 < exit_cell->dist2) exit_cell = &c;
        }
        if (exit_cell) return exit_cell->center;
    } else {
        std::sort(candidates.begin(), candidates.end(), [&](const Candidate& a,
                                                            const Candidate& b) {
            if (a.value != b.value) return a.value > b.value;
            if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
            return grid.spec.flat(a.idx) < grid.spec.flat(b.idx);
        });
        for (const Candidate& c : candidates) {
            if (c.value < 0.0) break;  // only danger left
            if (path_stays_safe(grid, here, c.center)) return c.center;
        }
    }

    // Nothing safe in reach: head for the candidate nearest home.
    const Candidate* escape = &candidates.front();
    for (const Candidate& c : candidates) {
        if (distance(c.center, view.agent_base) < distance(escape->center, view.agent_base)) {
            escape = &c;
        }
    }
    return escape->center;
}

std::optional<EntityId> select_target(const FeatureView& view, const AgentState& state) {
    (void)state;
    const AgentView& agent = view.agent;
    auto in_range = [&](WorldPos p) { return distance(agent.pos, p) <= agent.attack_range; };

    // Danger first: an enemy hero that has the agent in its sights.
    const HeroView* danger = nullptr;
    for (const HeroView& h : view.enemy_heroes) {
        if (h.current_target != agent.id || !in_range(h.pos)) continue;
        if (!danger || h.hp < danger->hp || (h.hp == danger->hp && h.id < danger->id)) {
            danger = &h;
        }
    }
    if (danger) return danger->id;

    // Resource collection: the creep a single hit finishes.
    const CreepView* last_hittable = nullptr;
    for (const CreepView& c : view.enemy_creeps) {
        if (c.hp > agent.attack_damage || !in_range(c.pos)) continue;
        if (!last_hittable || c.hp < last_hittable->hp ||
            (c.hp == last_hittable->hp && c.id < last_hittable->id)) {
            last_hittable = &c;
        }
    }
    if (last_hittable) return last_hittable->id;

    // Secure push: a structure with the creep shield up and no enemy hero
    // close enough to punish the commitment.
    auto hero_near_agent = [&](double radius) {
        for (const HeroView& h : view.enemy_heroes) {
            if (distance(agent.pos, h.pos) <= radius) return true;
        }
        return false;
    };
    const TowerView* push_tower = nullptr;
    double push_d = 0.0;
    for (const TowerView& t : view.enemy_towers) {
        if (!in_range(t.pos) || t.ctx.alpha < 3 || hero_near_agent(t.range)) continue;
        const double d = distance(agent.pos, t.pos);
        if (!push_tower || d < push_d) {
            push_tower = &t;
            push_d = d;
        }
    }
    if (push_tower) return push_tower->id;
    if (view.enemy_nexus && in_range(view.enemy_nexus->pos) &&
        view.enemy_nexus->creep_shield >= 3 && !hero_near_agent(kStructureShieldRadius)) {
        return view.enemy_nexus->id;
    }

    // Otherwise chip the weakest creep in reach.
    const CreepView* weakest = nullptr;
    for (const CreepView& c : view.enemy_creeps) {
        if (!in_range(c.pos)) continue;
        if (!weakest || c.hp < weakest->hp || (c.hp == weakest->hp && c.id < weakest->id)) {
            weakest = &c;
        }
    }
    if (weakest) return weakest->id;
    return std::nullopt;
}

Command orbwalk(const AgentState& state, const FeatureView& view,
                std::optional<EntityId> target, WorldPos nav_target, double now) {
    const AgentView& agent = view.agent;
    const double hold_until = agent.attack_lock_until + state.turn_time + state.latency;
    if (now + kTimeEps < hold_until) return Command::hold();

    if (target) {
        WorldPos target_pos;
        bool found = false;
        for (const CreepView& c : view.enemy_creeps) {
            if (c.id == *target) {
                target_pos = c.pos;
                found = true;
            }
        }
        for (const HeroView& h : view.enemy_heroes) {
            if (h.id == *target) {
                target_pos = h.pos;
                found = true;
            }
        }
        for (const TowerView& t : view.enemy_towers) {
            if (t.id == *target) {
                target_pos = t.pos;
                found = true;
            }
        }
        if (view.enemy_nexus && view.enemy_nexus->id == *target) {
            target_pos = view.enemy_nexus->pos;
            found = true;
        }
        if (found && distance(agent.pos, target_pos) <= agent.attack_range &&
            now + kTimeEps >= agent.last_attack_time + agent.attack_period) {
            return Command::attack(*target);
        }
    }
    return Command::move(nav_target);
}

Command decide(const FeatureView& view, const GridSpec& spec, AgentState& state, double now) {
    const double window = 1.0 / state.im_rate;
    if (!state.decision_grid || now + kTimeEps >= state.last_compose_time + window) {
        state.decision_grid = compose(view, spec, state.tuning);
        state.last_compose_time = now;
    }
    state.nav_target = navigate(view, *state.decision_grid, state);
    state.current_target = select_target(view, state);
    return orbwalk(state, view, state.current_target, state.nav_target, now);
}

}  // namespace lanecraft
