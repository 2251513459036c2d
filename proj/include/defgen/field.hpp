#pragma once

#include <cstddef>

#include "defgen/geom.hpp"

namespace defgen {

// Rink geometry. Play is restricted to the defensive (left) half,
// x <= active_x_max; inputs are capped at speed_cap.
struct FieldSpec {
    double width = 61.0;         // [m]
    double height = 30.0;        // [m]
    Vec2 goal{6.0, 15.0};
    double active_x_max = 30.0;  // weight is zeroed beyond this line
    double speed_cap = 3.0;      // [m/s]
};

bool in_field(const FieldSpec& spec, Vec2 p);

// High-danger zone in front of the goal: intersection of
//   y >= -x + 20,  y <= x + 10,  (x-5)^2 + (y-15)^2 <= 225.
// Boundaries count as inside.
bool in_house_area(Vec2 p);

// Low-importance band right of the blue line:
// x in [14.945, 21.960], y in [10, 20], boundaries inclusive.
bool in_low_gain_zone(Vec2 p);

// Uniform cell grid over the field. Cells are enumerated row-major,
// x fastest, so index(i,j) = j*nx + i.
struct Grid {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;  // cell size [m]
    double dy = 0.0;

    Vec2 center(int i, int j) const { return {(i + 0.5) * dx, (j + 0.5) * dy}; }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * nx + i;
    }
    std::size_t cell_count() const { return static_cast<std::size_t>(nx) * ny; }
    double cell_area() const { return dx * dy; }
};

// Builds the grid for a requested resolution in (0, 1]. Cell counts are
// rounded up, so the actual cell size never exceeds the request and the
// grid covers the field exactly.
Grid make_grid(const FieldSpec& spec, double resolution);

}  // namespace defgen
