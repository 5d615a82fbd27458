// Positions, distances and map bounds shared by every subsystem.
#pragma once

#include <algorithm>
#include <cmath>

namespace lanecraft {

struct WorldPos {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const WorldPos&) const = default;
};

inline double distance(WorldPos a, WorldPos b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

// Playable rectangle. Entity positions are kept inside [0,width] x [0,height].
struct MapSpec {
    double width = 12000.0;
    double height = 3000.0;

    WorldPos clamp(WorldPos p) const {
        return {std::clamp(p.x, 0.0, width), std::clamp(p.y, 0.0, height)};
    }
    bool contains(WorldPos p) const {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }
};

// Step from `from` toward `to` by at most `step` units, arriving exactly.
inline WorldPos move_towards(WorldPos from, WorldPos to, double step) {
    const double d = distance(from, to);
    if (d <= step) return to;
    const double t = step / d;
    return {from.x + (to.x - from.x) * t, from.y + (to.y - from.y) * t};
}

}  // namespace lanecraft
