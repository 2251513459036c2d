#include "defgen/field.hpp"

#include <cmath>
#include <stdexcept>

namespace defgen {

bool in_field(const FieldSpec& spec, Vec2 p) {
    return p.x >= 0.0 && p.x <= spec.width && p.y >= 0.0 && p.y <= spec.height;
}

bool in_house_area(Vec2 p) {
    if (p.y < -p.x + 20.0) return false;
    if (p.y > p.x + 10.0) return false;
    const double cx = p.x - 5.0;
    const double cy = p.y - 15.0;
    return cx * cx + cy * cy <= 225.0;
}

bool in_low_gain_zone(Vec2 p) {
    return p.x >= 14.945 && p.x <= 21.960 && p.y >= 10.0 && p.y <= 20.0;
}

Grid make_grid(const FieldSpec& spec, double resolution) {
    if (!(resolution > 0.0) || resolution > 1.0)
        throw std::invalid_argument("grid resolution must be in (0, 1]");
    Grid g;
    g.nx = static_cast<int>(std::ceil(spec.width / resolution - 1e-9));
    g.ny = static_cast<int>(std::ceil(spec.height / resolution - 1e-9));
    g.dx = spec.width / g.nx;
    g.dy = spec.height / g.ny;
    return g;
}

}  // namespace defgen
