// Heatmap export: CSV for plotting pipelines, 8-bit PGM for quick viewing.
#pragma once

#include <ostream>
#include <string>

#include "lanecraft/grid.hpp"

namespace lanecraft {

// One line per grid row, comma-separated decimal values, forbidden cells
// emitted as "-inf".
void write_grid_csv(const InfluenceGrid& grid, std::ostream& out);

// Binary P5 PGM. Values rescale affinely so min -> 0 and max -> 255;
// forbidden cells count as the minimum. An all-equal grid maps to 128.
void write_grid_pgm(const InfluenceGrid& grid, std::ostream& out);

std::string grid_to_csv(const InfluenceGrid& grid);
std::string grid_to_pgm(const InfluenceGrid& grid);

}  // namespace lanecraft
