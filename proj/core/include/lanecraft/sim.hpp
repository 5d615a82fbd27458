// Deterministic single-lane world: creep waves, tower aggro, auto-attack
// combat, bases and victory. Everything advances in fixed ticks; identical
// inputs give bit-identical event streams.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lanecraft/geometry.hpp"
#include "lanecraft/influence.hpp"

namespace lanecraft {

enum class Team { Blue, Red };

inline Team opponent(Team t) { return t == Team::Blue ? Team::Red : Team::Blue; }
inline int team_index(Team t) { return t == Team::Blue ? 0 : 1; }

enum class UnitKind { Hero, MeleeCreep, RangedCreep };

inline constexpr double kNever = -1e18;

struct Unit {
    EntityId id = kNoEntity;
    Team team = Team::Blue;
    UnitKind kind = UnitKind::MeleeCreep;
    WorldPos pos;
    double hp = 1.0;
    double max_hp = 1.0;
    double attack_damage = 0.0;
    double attack_period = 1.0;
    double windup = 0.0;  // animation time; movement cancels a pending hit
    double range = 100.0;
    double move_speed = 325.0;
    double aggro_radius = 600.0;      // creeps only
    // Creeps fight creeps and structures; without unit collision a marching
    // wave would otherwise pin a hero it co-moves with. 0 = ignore heroes.
    double hero_aggro_radius = 0.0;
    double last_attack_time = kNever;
    double attack_lock_until = kNever;
    EntityId current_target = kNoEntity;
    std::string profile;  // heroes: archetype name in the profile table
    bool alive = true;
    double respawn_at = kNever;  // heroes respawn at their base
};

struct Tower {
    EntityId id = kNoEntity;
    Team team = Team::Blue;
    WorldPos pos;
    double hp = 3500.0;
    double max_hp = 3500.0;
    double damage = 150.0;
    double attack_period = 1.2;
    double range = 775.0;
    EntityId locked_target = kNoEntity;  // empty exactly when idle
    double retarget_delay = 0.0;  // aiming pause after acquiring a new target
    double lock_acquired_at = kNever;
    double last_attack_time = kNever;
    std::vector<EntityId> entry_order;  // enemies currently in range, oldest first
    bool alive = true;
};

struct Nexus {
    EntityId id = kNoEntity;
    Team team = Team::Blue;
    WorldPos pos;
    double hp = 2000.0;
    double max_hp = 2000.0;
    bool alive = true;
};

struct WaveConfig {
    double period = 30.0;
    double first_spawn = 15.0;
    int melee_count = 3;
    int ranged_count = 3;
    double spawn_spacing = 120.0;
};

enum class EventKind {
    Spawn,
    Attack,
    Damage,
    LastHit,
    UnitDeath,
    TowerDeath,
    NexusDeath,
    AggroChange,
    Move,
    AttackMiss,
    CommandRejected,
};

const char* event_kind_name(EventKind kind);

struct Event {
    std::int64_t tick = 0;
    double time = 0.0;
    EventKind kind = EventKind::Spawn;
    EntityId actor = kNoEntity;
    EntityId target = kNoEntity;
    double value = 0.0;
    double x = 0.0;
    double y = 0.0;
    bool has_pos = false;  // Spawn and Move carry a position
};

struct Command {
    enum class Kind { Move, Attack, Hold };
    Kind kind = Kind::Hold;
    WorldPos move_to;
    EntityId target = kNoEntity;

    static Command move(WorldPos to) { return {Kind::Move, to, kNoEntity}; }
    static Command attack(EntityId id) { return {Kind::Attack, {}, id}; }
    static Command hold() { return {}; }
};

struct HeroStats {
    int kills = 0;
    int deaths = 0;
    int assists = 0;
    int last_hits = 0;
};

// Attack started and waiting for its windup to finish. Landing checks the
// target is still alive and in range.
struct PendingAttack {
    double land_time = 0.0;
    std::int64_t seq = 0;
    EntityId attacker = kNoEntity;
    EntityId target = kNoEntity;
    double damage = 0.0;
    double range = 0.0;
    // cooldown refund on a whiff: the swing never connected
    double attacker_prev_attack_time = kNever;
};

struct WorldState {
    MapSpec map;
    double dt = 1.0 / 30.0;
    std::int64_t tick_index = 0;
    double clock = 0.0;  // always tick_index * dt
    double time_cap = 2400.0;
    std::uint64_t rng_seed = 0;

    std::vector<Unit> units;    // kept sorted by id
    std::vector<Tower> towers;  // kept sorted by id
    std::array<Nexus, 2> nexus;          // [Blue, Red]
    std::array<WorldPos, 2> base_pos;    // [Blue, Red]
    std::array<std::vector<WorldPos>, 2> lane_waypoints;
    std::array<WorldPos, 2> hero_spawn;

    WaveConfig wave;
    Unit melee_template;   // stats stamped onto spawned melee creeps
    Unit ranged_template;  // stats stamped onto spawned ranged creeps
    double next_spawn_time = 15.0;
    int waves_spawned = 0;

    std::map<EntityId, HeroStats> hero_stats;
    std::vector<PendingAttack> pending_attacks;
    std::int64_t attack_seq = 0;
    EntityId next_unit_id = 1000;

    std::optional<Team> winner;
    bool finished = false;

    // hero damage taken recently, for assist attribution: victim -> (hero, time)
    std::map<EntityId, std::vector<std::pair<EntityId, double>>> recent_hero_damage;

    Unit* find_unit(EntityId id);
    const Unit* find_unit(EntityId id) const;
    Tower* find_tower(EntityId id);
    const Tower* find_tower(EntityId id) const;
    Nexus* find_nexus(EntityId id);
    Nexus& nexus_of(Team t) { return nexus[team_index(t)]; }
    const Nexus& nexus_of(Team t) const { return nexus[team_index(t)]; }

    Unit& spawn_hero(Team team, WorldPos pos, const Unit& stats_template);
};

// Target choice for one tower. Priority: enemy hero attacking an ally hero
// in range, then the earliest-entered enemy still in range, then nearest
// creep, then nearest hero. A live in-range lock is kept unless a priority-1
// candidate appears.
std::optional<EntityId> tower_select_target(const Tower& tower, const WorldState& world);

// Spawns one wave per team (melee first, marching order front to back) and
// schedules the next one. Creeps get a small deterministic lateral offset
// derived from the world seed.
void spawn_wave(WorldState& world, std::vector<Event>& events);

// Applies one landing hit: damage, floor at zero, death bookkeeping and
// last-hit attribution to the killing blow's source.
void resolve_attack(WorldState& world, EntityId attacker, EntityId target, double damage,
                    std::vector<Event>& events);

// Winner once a nexus is down; empty while both stand.
std::optional<Team> check_victory(const WorldState& world);

// One fixed tick in phase order: wave spawns, towers, creep AI, hero
// commands, damage resolution, victory check. Commands keyed by hero id.
std::vector<Event> step(WorldState& world, const std::map<EntityId, Command>& commands);

}  // namespace lanecraft
