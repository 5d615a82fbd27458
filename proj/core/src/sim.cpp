#include "lanecraft/sim.hpp"

#include <algorithm>
#include <cmath>

namespace lanecraft {

namespace {

constexpr double kTimeEps = 1e-7;
constexpr double kAssistWindow = 10.0;
constexpr double kHeroRespawnDelay = 10.0;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

bool attack_due(double now, double last_attack_time, double attack_period) {
    return now + kTimeEps >= last_attack_time + attack_period;
}

Event make_event(const WorldState& w, EventKind kind, EntityId actor, EntityId target,
                 double value) {
    Event e;
    e.tick = w.tick_index;
    e.time = w.clock;
    e.kind = kind;
    e.actor = actor;
    e.target = target;
    e.value = value;
    return e;
}

Event make_pos_event(const WorldState& w, EventKind kind, EntityId actor, WorldPos pos,
                     double value) {
    Event e = make_event(w, kind, actor, kNoEntity, value);
    e.x = pos.x;
    e.y = pos.y;
    e.has_pos = true;
    return e;
}

struct TargetRef {
    EntityId id = kNoEntity;
    WorldPos pos;
    bool alive = false;
};

TargetRef resolve_target(const WorldState& w, EntityId id) {
    if (const Unit* u = w.find_unit(id); u && u->alive) return {id, u->pos, true};
    if (const Tower* t = w.find_tower(id); t && t->alive) return {id, t->pos, true};
    for (const Nexus& n : w.nexus) {
        if (n.id == id && n.alive) return {id, n.pos, true};
    }
    return {};
}

void queue_attack(WorldState& w, EntityId attacker, EntityId target, double damage,
                  double range, double windup, double prev_attack_time,
                  std::vector<Event>& events) {
    PendingAttack pa;
    pa.land_time = w.clock + windup;
    pa.seq = w.attack_seq++;
    pa.attacker = attacker;
    pa.target = target;
    pa.damage = damage;
    pa.range = range;
    pa.attacker_prev_attack_time = prev_attack_time;
    w.pending_attacks.push_back(pa);
    events.push_back(make_event(w, EventKind::Attack, attacker, target, damage));
}

// A swing that never connected refunds its cooldown.
void refund_attack(WorldState& w, const PendingAttack& pa) {
    if (Unit* u = w.find_unit(pa.attacker); u && u->alive) {
        u->last_attack_time = pa.attacker_prev_attack_time;
    } else if (Tower* t = w.find_tower(pa.attacker); t && t->alive) {
        t->last_attack_time = pa.attacker_prev_attack_time;
    }
}

WorldPos attacker_pos(const WorldState& w, EntityId id, bool& alive) {
    if (const Unit* u = w.find_unit(id)) {
        alive = u->alive;
        return u->pos;
    }
    if (const Tower* t = w.find_tower(id)) {
        alive = t->alive;
        return t->pos;
    }
    alive = false;
    return {};
}

// --- phase 1: waves and hero respawns -------------------------------------

void phase_spawns(WorldState& w, std::vector<Event>& events) {
    while (w.clock + kTimeEps >= w.next_spawn_time && !w.finished) {
        spawn_wave(w, events);
    }
    for (Unit& u : w.units) {
        if (u.kind != UnitKind::Hero || u.alive) continue;
        if (u.respawn_at != kNever && w.clock + kTimeEps >= u.respawn_at) {
            u.alive = true;
            u.hp = u.max_hp;
            u.pos = w.hero_spawn[team_index(u.team)];
            u.respawn_at = kNever;
            u.current_target = kNoEntity;
            u.last_attack_time = kNever;
            u.attack_lock_until = kNever;
            events.push_back(make_pos_event(w, EventKind::Spawn, u.id, u.pos, 0.0));
        }
    }
}

// --- phase 2: towers --------------------------------------------------------

void update_tower_entries(WorldState& w, Tower& tower) {
    // Drop entries that died or left range, then append new arrivals in id
    // order so same-tick entries are deterministic.
    std::erase_if(tower.entry_order, [&](EntityId id) {
        const Unit* u = w.find_unit(id);
        return !u || !u->alive || distance(u->pos, tower.pos) > tower.range;
    });
    for (const Unit& u : w.units) {
        if (!u.alive || u.team == tower.team) continue;
        if (distance(u.pos, tower.pos) > tower.range) continue;
        if (std::find(tower.entry_order.begin(), tower.entry_order.end(), u.id) ==
            tower.entry_order.end()) {
            tower.entry_order.push_back(u.id);
        }
    }
}

void phase_towers(WorldState& w, std::vector<Event>& events) {
    for (Tower& tower : w.towers) {
        if (!tower.alive) continue;
        update_tower_entries(w, tower);
        const EntityId previous = tower.locked_target;
        const auto choice = tower_select_target(tower, w);
        tower.locked_target = choice.value_or(kNoEntity);
        if (tower.locked_target != previous) {
            events.push_back(
                make_event(w, EventKind::AggroChange, tower.id, tower.locked_target, 0.0));
            tower.lock_acquired_at = w.clock;
        }
        if (tower.locked_target == kNoEntity) continue;
        if (!attack_due(w.clock, tower.last_attack_time, tower.attack_period)) continue;
        if (w.clock + kTimeEps < tower.lock_acquired_at + tower.retarget_delay) continue;
        const double prev = tower.last_attack_time;
        tower.last_attack_time = w.clock;
        // Towers have no windup: the hit lands in this tick's resolution phase.
        queue_attack(w, tower.id, tower.locked_target, tower.damage, tower.range, 0.0, prev,
                     events);
    }
}

// --- phase 3: creeps --------------------------------------------------------

// Creeps fight other creeps first, then structures, and bother heroes only
// when nothing else is around.
TargetRef creep_pick_target(const WorldState& w, const Unit& creep) {
    const Unit* best_unit = nullptr;
    double best_d = 0.0;
    auto consider_unit = [&](const Unit& u, double acquire_radius) {
        const double d = distance(creep.pos, u.pos);
        if (d > acquire_radius) return;
        if (!best_unit || d < best_d) {
            best_unit = &u;
            best_d = d;
        }
    };
    for (const Unit& u : w.units) {
        if (u.alive && u.team != creep.team && u.kind != UnitKind::Hero) {
            consider_unit(u, creep.aggro_radius);
        }
    }
    if (best_unit) return {best_unit->id, best_unit->pos, true};

    const Tower* best_tower = nullptr;
    for (const Tower& t : w.towers) {
        if (!t.alive || t.team == creep.team) continue;
        const double d = distance(creep.pos, t.pos);
        if (d > creep.aggro_radius) continue;
        if (!best_tower || d < best_d) {
            best_tower = &t;
            best_d = d;
        }
    }
    if (best_tower) return {best_tower->id, best_tower->pos, true};

    const Nexus& enemy_nexus = w.nexus_of(opponent(creep.team));
    if (enemy_nexus.alive && distance(creep.pos, enemy_nexus.pos) <= creep.aggro_radius) {
        return {enemy_nexus.id, enemy_nexus.pos, true};
    }

    for (const Unit& u : w.units) {
        if (u.alive && u.team != creep.team && u.kind == UnitKind::Hero) {
            consider_unit(u, creep.hero_aggro_radius);
        }
    }
    if (best_unit) return {best_unit->id, best_unit->pos, true};
    return {};
}

void phase_creeps(WorldState& w, std::vector<Event>& events) {
    for (Unit& creep : w.units) {
        if (!creep.alive || creep.kind == UnitKind::Hero) continue;
        if (w.clock + kTimeEps < creep.attack_lock_until) continue;  // mid-windup

        const TargetRef target = creep_pick_target(w, creep);
        creep.current_target = target.id;
        if (target.alive) {
            const double d = distance(creep.pos, target.pos);
            if (d <= creep.range) {
                if (attack_due(w.clock, creep.last_attack_time, creep.attack_period)) {
                    const double prev = creep.last_attack_time;
                    creep.last_attack_time = w.clock;
                    creep.attack_lock_until = w.clock + creep.windup;
                    queue_attack(w, creep.id, target.id, creep.attack_damage, creep.range,
                                 creep.windup, prev, events);
                }
                // in range but on cooldown: stand and wait
            } else {
                creep.pos = w.map.clamp(
                    move_towards(creep.pos, target.pos, creep.move_speed * w.dt));
            }
            continue;
        }

        // March down the lane, holding the spawn file until the goal is
        // close, then converge on it.
        const auto& waypoints = w.lane_waypoints[team_index(creep.team)];
        if (!waypoints.empty()) {
            const WorldPos goal = waypoints.back();
            const WorldPos march_to = std::abs(creep.pos.x - goal.x) > 1500.0
                                          ? WorldPos{goal.x, creep.pos.y}
                                          : goal;
            creep.pos = w.map.clamp(
                move_towards(creep.pos, march_to, creep.move_speed * w.dt));
        }
    }
}

// --- phase 4: hero commands --------------------------------------------------

void cancel_pending_attack(WorldState& w, EntityId attacker, std::vector<Event>& events) {
    for (auto it = w.pending_attacks.begin(); it != w.pending_attacks.end();) {
        if (it->attacker == attacker) {
            events.push_back(make_event(w, EventKind::AttackMiss, attacker, it->target, 0.0));
            it = w.pending_attacks.erase(it);
        } else {
            ++it;
        }
    }
}

void phase_heroes(WorldState& w, const std::map<EntityId, Command>& commands,
                  std::vector<Event>& events) {
    for (const auto& [hero_id, cmd] : commands) {
        Unit* hero = w.find_unit(hero_id);
        if (!hero || !hero->alive || hero->kind != UnitKind::Hero) continue;

        switch (cmd.kind) {
            case Command::Kind::Hold:
                break;
            case Command::Kind::Move: {
                if (w.clock + kTimeEps < hero->attack_lock_until) {
                    // Moving mid-windup cancels the swing.
                    cancel_pending_attack(w, hero->id, events);
                    hero->attack_lock_until = kNever;
                }
                hero->pos =
                    w.map.clamp(move_towards(hero->pos, cmd.move_to, hero->move_speed * w.dt));
                events.push_back(make_pos_event(w, EventKind::Move, hero->id, hero->pos, 0.0));
                break;
            }
            case Command::Kind::Attack: {
                const TargetRef target = resolve_target(w, cmd.target);
                if (!target.alive) {
                    events.push_back(
                        make_event(w, EventKind::CommandRejected, hero->id, cmd.target, 0.0));
                    break;
                }
                hero->current_target = target.id;
                if (w.clock + kTimeEps < hero->attack_lock_until) break;  // locked
                const double d = distance(hero->pos, target.pos);
                if (d > hero->range) {
                    // Attack-move: close in until the target is in range.
                    hero->pos = w.map.clamp(
                        move_towards(hero->pos, target.pos, hero->move_speed * w.dt));
                    events.push_back(
                        make_pos_event(w, EventKind::Move, hero->id, hero->pos, 0.0));
                    break;
                }
                if (attack_due(w.clock, hero->last_attack_time, hero->attack_period)) {
                    const double prev = hero->last_attack_time;
                    hero->last_attack_time = w.clock;
                    hero->attack_lock_until = w.clock + hero->windup;
                    queue_attack(w, hero->id, target.id, hero->attack_damage, hero->range,
                                 hero->windup, prev, events);
                }
                break;
            }
        }
    }
}

// --- phase 5: damage resolution ----------------------------------------------

void phase_resolve(WorldState& w, std::vector<Event>& events) {
    std::vector<PendingAttack> due;
    for (auto it = w.pending_attacks.begin(); it != w.pending_attacks.end();) {
        if (it->land_time <= w.clock + kTimeEps) {
            due.push_back(*it);
            it = w.pending_attacks.erase(it);
        } else {
            ++it;
        }
    }
    std::sort(due.begin(), due.end(), [](const PendingAttack& a, const PendingAttack& b) {
        if (a.land_time != b.land_time) return a.land_time < b.land_time;
        return a.seq < b.seq;
    });

    for (const PendingAttack& pa : due) {
        bool attacker_alive = false;
        const WorldPos from = attacker_pos(w, pa.attacker, attacker_alive);
        if (!attacker_alive) {
            events.push_back(make_event(w, EventKind::AttackMiss, pa.attacker, pa.target, 0.0));
            continue;
        }
        const TargetRef target = resolve_target(w, pa.target);
        if (!target.alive || distance(from, target.pos) > pa.range + kTimeEps) {
            events.push_back(make_event(w, EventKind::AttackMiss, pa.attacker, pa.target, 0.0));
            refund_attack(w, pa);
            continue;
        }
        resolve_attack(w, pa.attacker, pa.target, pa.damage, events);
    }
}

void remove_dead_units(WorldState& w) {
    // Dead creeps leave the world before the next tick; dead heroes stay for
    // their respawn timer.
    std::erase_if(w.units, [](const Unit& u) { return !u.alive && u.kind != UnitKind::Hero; });
}

// --- phase 6: victory ---------------------------------------------------------

void phase_victory(WorldState& w) {
    if (const auto winner = check_victory(w)) {
        w.winner = winner;
        w.finished = true;
    }
}

}  // namespace

const char* event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::Spawn: return "Spawn";
        case EventKind::Attack: return "Attack";
        case EventKind::Damage: return "Damage";
        case EventKind::LastHit: return "LastHit";
        case EventKind::UnitDeath: return "UnitDeath";
        case EventKind::TowerDeath: return "TowerDeath";
        case EventKind::NexusDeath: return "NexusDeath";
        case EventKind::AggroChange: return "AggroChange";
        case EventKind::Move: return "Move";
        case EventKind::AttackMiss: return "AttackMiss";
        case EventKind::CommandRejected: return "CommandRejected";
    }
    return "Unknown";
}

Unit* WorldState::find_unit(EntityId id) {
    for (Unit& u : units) {
        if (u.id == id) return &u;
    }
    return nullptr;
}

const Unit* WorldState::find_unit(EntityId id) const {
    for (const Unit& u : units) {
        if (u.id == id) return &u;
    }
    return nullptr;
}

Tower* WorldState::find_tower(EntityId id) {
    for (Tower& t : towers) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

const Tower* WorldState::find_tower(EntityId id) const {
    for (const Tower& t : towers) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

Nexus* WorldState::find_nexus(EntityId id) {
    for (Nexus& n : nexus) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

Unit& WorldState::spawn_hero(Team team, WorldPos pos, const Unit& stats_template) {
    Unit hero = stats_template;
    hero.id = next_unit_id++;
    hero.team = team;
    hero.kind = UnitKind::Hero;
    hero.pos = map.clamp(pos);
    hero.alive = true;
    units.push_back(hero);
    hero_stats.emplace(hero.id, HeroStats{});
    return units.back();
}

std::optional<EntityId> tower_select_target(const Tower& tower, const WorldState& world) {
    const double now = world.clock;

    auto in_range = [&](const Unit& u) {
        return u.alive && u.team != tower.team && distance(u.pos, tower.pos) <= tower.range;
    };

    // Priority 1: enemy hero attacking an ally hero while in range.
    const Unit* protect = nullptr;
    for (const Unit& u : world.units) {
        if (u.kind != UnitKind::Hero || !in_range(u)) continue;
        if (u.current_target == kNoEntity) continue;
        if (now - u.last_attack_time > u.attack_period + kTimeEps) continue;
        const Unit* victim = world.find_unit(u.current_target);
        if (!victim || !victim->alive) continue;
        if (victim->kind == UnitKind::Hero && victim->team == tower.team) {
            if (!protect || u.id < protect->id) protect = &u;
        }
    }
    if (protect) return protect->id;

    // Retention: keep a live in-range lock when no priority-1 candidate exists.
    if (tower.locked_target != kNoEntity) {
        const Unit* locked = world.find_unit(tower.locked_target);
        if (locked && in_range(*locked)) return tower.locked_target;
    }

    // Priority 2: earliest-entered enemy still in range.
    for (EntityId id : tower.entry_order) {
        const Unit* u = world.find_unit(id);
        if (u && in_range(*u)) return id;
    }

    // Priorities 3 and 4: nearest creep, then nearest hero.
    const Unit* best = nullptr;
    double best_d = 0.0;
    for (const Unit& u : world.units) {
        if (u.kind == UnitKind::Hero || !in_range(u)) continue;
        const double d = distance(u.pos, tower.pos);
        if (!best || d < best_d) {
            best = &u;
            best_d = d;
        }
    }
    if (best) return best->id;
    for (const Unit& u : world.units) {
        if (u.kind != UnitKind::Hero || !in_range(u)) continue;
        const double d = distance(u.pos, tower.pos);
        if (!best || d < best_d) {
            best = &u;
            best_d = d;
        }
    }
    if (best) return best->id;
    return std::nullopt;
}

void spawn_wave(WorldState& world, std::vector<Event>& events) {
    const int wave_no = world.waves_spawned;
    for (Team team : {Team::Blue, Team::Red}) {
        const int ti = team_index(team);
        const WorldPos base = world.base_pos[ti];
        const WorldPos goal = world.lane_waypoints[ti].back();
        const double dir = goal.x >= base.x ? 1.0 : -1.0;
        const int total = world.wave.melee_count + world.wave.ranged_count;
        for (int j = 0; j < total; ++j) {
            const bool melee = j < world.wave.melee_count;
            Unit creep = melee ? world.melee_template : world.ranged_template;
            creep.id = world.next_unit_id++;
            creep.team = team;
            creep.kind = melee ? UnitKind::MeleeCreep : UnitKind::RangedCreep;
            creep.alive = true;
            // Front-to-back marching column with a small seeded lateral
            // offset so different seeds produce different fights.
            const std::uint64_t h = splitmix64(world.rng_seed ^
                                               (static_cast<std::uint64_t>(wave_no) << 16) ^
                                               (static_cast<std::uint64_t>(ti) << 8) ^
                                               static_cast<std::uint64_t>(j));
            const double lateral = static_cast<double>(h % 1801) - 900.0;
            creep.pos = world.map.clamp(
                {base.x + dir * world.wave.spawn_spacing * (total - j), base.y + lateral});
            events.push_back(make_pos_event(world, EventKind::Spawn, creep.id, creep.pos,
                                            static_cast<double>(creep.kind)));
            world.units.push_back(creep);
        }
    }
    world.waves_spawned += 1;
    world.next_spawn_time += world.wave.period;
}

void resolve_attack(WorldState& world, EntityId attacker, EntityId target, double damage,
                    std::vector<Event>& events) {
    const Unit* attacker_unit = world.find_unit(attacker);
    const bool attacker_is_hero = attacker_unit && attacker_unit->kind == UnitKind::Hero;

    if (Unit* victim = world.find_unit(target); victim && victim->alive) {
        const double dealt = std::min(damage, victim->hp);
        victim->hp -= dealt;
        events.push_back(make_event(world, EventKind::Damage, attacker, target, dealt));
        if (victim->kind == UnitKind::Hero && attacker_is_hero) {
            world.recent_hero_damage[target].emplace_back(attacker, world.clock);
        }
        if (victim->hp > 0.0) return;

        victim->alive = false;
        events.push_back(make_event(world, EventKind::UnitDeath, target, attacker, 0.0));
        if (victim->kind == UnitKind::Hero) {
            victim->respawn_at = world.clock + kHeroRespawnDelay;
            world.hero_stats[victim->id].deaths += 1;
            if (attacker_is_hero) world.hero_stats[attacker].kills += 1;
            auto& damagers = world.recent_hero_damage[target];
            for (const auto& [hero_id, t] : damagers) {
                if (hero_id != attacker && world.clock - t <= kAssistWindow) {
                    world.hero_stats[hero_id].assists += 1;
                }
            }
            damagers.clear();
        } else if (attacker_is_hero) {
            world.hero_stats[attacker].last_hits += 1;
            events.push_back(make_event(world, EventKind::LastHit, attacker, target, 0.0));
        }
        return;
    }

    if (Tower* tower = world.find_tower(target); tower && tower->alive) {
        const double dealt = std::min(damage, tower->hp);
        tower->hp -= dealt;
        events.push_back(make_event(world, EventKind::Damage, attacker, target, dealt));
        if (tower->hp <= 0.0) {
            tower->alive = false;
            tower->locked_target = kNoEntity;
            events.push_back(make_event(world, EventKind::TowerDeath, target, attacker, 0.0));
        }
        return;
    }

    if (Nexus* nexus = world.find_nexus(target); nexus && nexus->alive) {
        const double dealt = std::min(damage, nexus->hp);
        nexus->hp -= dealt;
        events.push_back(make_event(world, EventKind::Damage, attacker, target, dealt));
        if (nexus->hp <= 0.0) {
            nexus->alive = false;
            events.push_back(make_event(world, EventKind::NexusDeath, target, attacker, 0.0));
        }
    }
}

std::optional<Team> check_victory(const WorldState& world) {
    if (!world.nexus_of(Team::Red).alive) return Team::Blue;
    if (!world.nexus_of(Team::Blue).alive) return Team::Red;
    return std::nullopt;
}

std::vector<Event> step(WorldState& world, const std::map<EntityId, Command>& commands) {
    std::vector<Event> events;
    if (world.finished) return events;
    if (world.clock + kTimeEps >= world.time_cap) {
        world.finished = true;  // time cap: halt with no winner recorded
        return events;
    }

    phase_spawns(world, events);
    phase_towers(world, events);
    phase_creeps(world, events);
    phase_heroes(world, commands, events);
    phase_resolve(world, events);
    remove_dead_units(world);
    phase_victory(world);

    world.tick_index += 1;
    world.clock = static_cast<double>(world.tick_index) * world.dt;
    return events;
}

}  // namespace lanecraft
