// Dense scalar grid over the map plus the cell queries the navigation layer
// runs every decision cycle. The grid is rebuilt from scratch each cycle;
// there is no history.
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "lanecraft/geometry.hpp"

namespace lanecraft {

// Weight for cells the agent must never stand in. Minimum of the value
// ordering and absorbing under max; stays well clear of NaN arithmetic
// because writers overwrite rather than accumulate on top of it.
inline constexpr double kForbidden = -std::numeric_limits<double>::infinity();

struct CellIndex {
    int col = 0;
    int row = 0;

    bool operator==(const CellIndex&) const = default;
};

struct GridSpec {
    double resolution = 100.0;  // game units per cell side
    int cols = 0;
    int rows = 0;
    WorldPos origin{0.0, 0.0};

    // cols/rows = ceil(extent / resolution) so the grid covers the whole map.
    static GridSpec for_map(const MapSpec& map, double resolution);

    // Half a cell: the discretisation error margin used by the equations.
    double delta() const { return resolution / 2.0; }

    int cell_count() const { return cols * rows; }

    bool in_bounds(CellIndex idx) const {
        return idx.col >= 0 && idx.col < cols && idx.row >= 0 && idx.row < rows;
    }
    std::size_t flat(CellIndex idx) const {
        return static_cast<std::size_t>(idx.row) * static_cast<std::size_t>(cols) +
               static_cast<std::size_t>(idx.col);
    }
};

// Cell containing pos: floor semantics on (pos - origin) / resolution,
// clamped to the grid so edge positions stay addressable.
CellIndex world_to_cell(WorldPos pos, const GridSpec& spec);

// Center of a cell; inverse of world_to_cell for every in-bounds index.
WorldPos cell_center(CellIndex idx, const GridSpec& spec);

struct InfluenceGrid {
    GridSpec spec;
    std::vector<double> values;  // row-major, length cols*rows

    explicit InfluenceGrid(GridSpec s)
        : spec(s), values(static_cast<std::size_t>(s.cell_count()), 0.0) {}

    double& at(CellIndex idx) { return values[spec.flat(idx)]; }
    double at(CellIndex idx) const { return values[spec.flat(idx)]; }

    // Fresh zero-valued map; every compose cycle starts here.
    void reset() { std::fill(values.begin(), values.end(), 0.0); }
};

// Cell with maximal value among cells whose center lies within `radius` of
// `center`. Ties break toward the center, then to the smallest row-major
// index, so identical inputs always give identical answers. Empty when no
// cell center is in range.
std::optional<CellIndex> argmax_in_radius(const InfluenceGrid& grid, WorldPos center,
                                          double radius);

// Visits every cell whose center is within `radius` of `center`.
template <typename Fn>
void for_cells_in_radius(const GridSpec& spec, WorldPos center, double radius, Fn&& fn) {
    const double res = spec.resolution;
    const int c0 = std::max(0, static_cast<int>(std::floor((center.x - radius - spec.origin.x) / res)));
    const int c1 = std::min(spec.cols - 1,
                            static_cast<int>(std::floor((center.x + radius - spec.origin.x) / res)));
    const int r0 = std::max(0, static_cast<int>(std::floor((center.y - radius - spec.origin.y) / res)));
    const int r1 = std::min(spec.rows - 1,
                            static_cast<int>(std::floor((center.y + radius - spec.origin.y) / res)));
    const double r2 = radius * radius;
    for (int row = r0; row <= r1; ++row) {
        for (int col = c0; col <= c1; ++col) {
            const CellIndex idx{col, row};
            const WorldPos p = cell_center(idx, spec);
            const double dx = p.x - center.x;
            const double dy = p.y - center.y;
            if (dx * dx + dy * dy <= r2) fn(idx, p);
        }
    }
}

}  // namespace lanecraft
