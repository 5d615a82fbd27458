#include "lanecraft/grid.hpp"

#include <cmath>

namespace lanecraft {

GridSpec GridSpec::for_map(const MapSpec& map, double resolution) {
    GridSpec spec;
    spec.resolution = resolution;
    spec.cols = static_cast<int>(std::ceil(map.width / resolution));
    spec.rows = static_cast<int>(std::ceil(map.height / resolution));
    spec.origin = {0.0, 0.0};
    return spec;
}

CellIndex world_to_cell(WorldPos pos, const GridSpec& spec) {
    const int col = static_cast<int>(std::floor((pos.x - spec.origin.x) / spec.resolution));
    const int row = static_cast<int>(std::floor((pos.y - spec.origin.y) / spec.resolution));
    return {std::clamp(col, 0, spec.cols - 1), std::clamp(row, 0, spec.rows - 1)};
}

WorldPos cell_center(CellIndex idx, const GridSpec& spec) {
    return {spec.origin.x + (idx.col + 0.5) * spec.resolution,
            spec.origin.y + (idx.row + 0.5) * spec.resolution};
}

std::optional<CellIndex> argmax_in_radius(const InfluenceGrid& grid, WorldPos center,
                                          double radius) {
    std::optional<CellIndex> best;
    double best_value = 0.0;
    double best_dist2 = 0.0;
    // Row-major scan: on full ties the first candidate seen wins, which is
    // exactly the smallest row-major index.
    for_cells_in_radius(grid.spec, center, radius, [&](CellIndex idx, WorldPos p) {
        const double v = grid.at(idx);
        const double dx = p.x - center.x;
        const double dy = p.y - center.y;
        const double d2 = dx * dx + dy * dy;
        if (!best || v > best_value || (v == best_value && d2 < best_dist2)) {
            best = idx;
            best_value = v;
            best_dist2 = d2;
        }
    });
    return best;
}

}  // namespace lanecraft
