#include "lanecraft/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lanecraft {

namespace {

void append_value(std::string& line, double v) {
    if (v == kForbidden) {
        line += "-inf";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    line += buf;
}

}  // namespace

void write_grid_csv(const InfluenceGrid& grid, std::ostream& out) {
    std::string line;
    for (int row = 0; row < grid.spec.rows; ++row) {
        line.clear();
        for (int col = 0; col < grid.spec.cols; ++col) {
            if (col > 0) line += ',';
            append_value(line, grid.at({col, row}));
        }
        line += '\n';
        out << line;
    }
}

void write_grid_pgm(const InfluenceGrid& grid, std::ostream& out) {
    double lo = 0.0, hi = 0.0;
    bool seen = false;
    for (double v : grid.values) {
        if (v == kForbidden) continue;
        if (!seen) {
            lo = hi = v;
            seen = true;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }

    out << "P5\n" << grid.spec.cols << ' ' << grid.spec.rows << "\n255\n";
    std::string pixels;
    pixels.reserve(static_cast<std::size_t>(grid.spec.cell_count()));
    const bool flat = !seen || hi == lo;
    for (int row = 0; row < grid.spec.rows; ++row) {
        for (int col = 0; col < grid.spec.cols; ++col) {
            unsigned char px;
            if (flat) {
                px = 128;
            } else {
                const double v = std::max(grid.at({col, row}), lo);  // -inf -> lo
                px = static_cast<unsigned char>(
                    std::lround((v - lo) / (hi - lo) * 255.0));
            }
            pixels.push_back(static_cast<char>(px));
        }
    }
    out.write(pixels.data(), static_cast<std::streamsize>(pixels.size()));
}

std::string grid_to_csv(const InfluenceGrid& grid) {
    std::ostringstream os;
    write_grid_csv(grid, os);
    return os.str();
}

std::string grid_to_pgm(const InfluenceGrid& grid) {
    std::ostringstream os;
    write_grid_pgm(grid, os);
    return os.str();
}

}  // namespace lanecraft
