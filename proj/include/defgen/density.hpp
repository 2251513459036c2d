#pragma once

#include <string>
#include <vector>

#include "defgen/field.hpp"

namespace defgen {

struct OffensivePlayer {
    int id = 0;
    Vec2 position;
    Vec2 velocity;  // [m/s]
};

// Snapshot of the attacking team at time t. puck_holder must be one of the
// player ids.
struct OffensiveFrame {
    double t = 0.0;
    std::vector<OffensivePlayer> players;
    int puck_holder = 0;

    const OffensivePlayer* find(int id) const;
    const OffensivePlayer& holder() const;  // throws if puck_holder is missing
};

struct DensityParams {
    double sigma = 15.0;             // gaussian variance [m^2]
    double p_gain = 2.0;             // house-area gain p
    double goal_house_factor = 1.5;  // extra goal gain inside the house
    double distance_norm = 25.0;     // [m]
    double low_gain = 0.1;           // blue-zone attenuation
    double holder_near_gain = 0.1;   // puck-priority gain, holder's half
    double holder_far_gain = 0.05;   // puck-priority gain, opposite half
};

// Discretized density over the grid; values are non-negative and
// identically zero beyond the active line x > 30.
struct WeightField {
    Grid grid;
    std::vector<double> values;  // grid.cell_count(), row-major x fastest

    double at(int i, int j) const { return values[grid.index(i, j)]; }
};

// Position of the gaussian bump representing an attacker: the attacker's
// position shifted one meter toward the goal plus its velocity. When the
// attacker stands on the goal the unit vector is undefined and the shift
// is omitted.
Vec2 weight_center(Vec2 position, Vec2 velocity, Vec2 goal);

// exp(-|q - center|^2 / (2 sigma)); unnormalized, peak 1 at the center.
double gaussian_bump(Vec2 q, Vec2 center, double sigma);

// (norm - dist_to_goal)/norm, clamped below at zero.
double distance_gain(Vec2 q, Vec2 goal, double norm);

// Pointwise composite density: distance-gained attacker bumps and the
// house-masked goal bump, staged through the house gain, the puck-priority
// adjustment, the blue-zone attenuation and the half-field mask.
double weight_field_at(Vec2 q, const OffensiveFrame& frame,
                       const DensityParams& params, const FieldSpec& spec);

WeightField build_weight_field(const OffensiveFrame& frame,
                               const DensityParams& params, const Grid& grid,
                               const FieldSpec& spec = {}, int threads = 1);

// Dense CSV dump, one "x,y,value" row per cell.
void write_weight_csv(const WeightField& field, const std::string& path);

}  // namespace defgen
