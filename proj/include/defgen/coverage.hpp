#pragma once

#include <optional>
#include <vector>

#include "defgen/density.hpp"

namespace defgen {

struct DefenderState {
    int id = 0;
    Vec2 position;
};

// Nearest-defender assignment of every grid cell; ties go to the lowest
// defender index.
struct VoronoiPartition {
    Grid grid;
    std::vector<int> owner;  // index into the defender list, per cell
};

VoronoiPartition assign_voronoi(const std::vector<DefenderState>& defenders,
                                const Grid& grid, int threads = 1);

// Midpoint-quadrature mass of defender i's cell.
double cell_mass(const VoronoiPartition& partition, const WeightField& field,
                 int i);

// Mass-weighted mean of defender i's cell; nullopt when the cell carries no
// mass (caller substitutes the defender's own position).
std::optional<Vec2> cell_centroid(const VoronoiPartition& partition,
                                  const WeightField& field, int i);

// u = -k (position - centroid)
Vec2 nominal_input(const DefenderState& defender, Vec2 centroid, double k);

// Locational cost: sum over cells of |q - x_owner|^2 phi(q) dA.
double coverage_cost(const std::vector<DefenderState>& defenders,
                     const WeightField& field, int threads = 1);

// One fused pass producing everything the per-step loop needs.
// Accumulation is per row, rows combined in index order, so results are
// bitwise identical to the single-purpose functions above for any thread
// count.
struct CoverageMoments {
    std::vector<double> mass;      // per defender
    std::vector<Vec2> centroid;    // defender position substituted when mass = 0
    std::vector<bool> degenerate;  // true where the substitution happened
    double cost = 0.0;
};

CoverageMoments coverage_moments(const std::vector<DefenderState>& defenders,
                                 const VoronoiPartition& partition,
                                 const WeightField& field, int threads = 1);

}  // namespace defgen
