#include "defgen/coverage.hpp"

#include <stdexcept>

#include "defgen/parallel.hpp"

namespace defgen {

namespace {

int nearest_defender(const std::vector<DefenderState>& defenders, Vec2 q) {
    int best = 0;
    double best_d2 = norm2(q - defenders[0].position);
    for (std::size_t k = 1; k < defenders.size(); ++k) {
        const double d2 = norm2(q - defenders[k].position);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = static_cast<int>(k);
        }
    }
    return best;
}

}  // namespace

VoronoiPartition assign_voronoi(const std::vector<DefenderState>& defenders,
                                const Grid& grid, int threads) {
    if (defenders.empty())
        throw std::invalid_argument("voronoi assignment needs at least one defender");
    for (const auto& d : defenders)
        if (!is_finite(d.position))
            throw std::invalid_argument("non-finite defender position");

    VoronoiPartition part;
    part.grid = grid;
    part.owner.assign(grid.cell_count(), 0);
    parallel_rows(grid.ny, threads, [&](int j) {
        for (int i = 0; i < grid.nx; ++i)
            part.owner[grid.index(i, j)] =
                nearest_defender(defenders, grid.center(i, j));
    });
    return part;
}

double cell_mass(const VoronoiPartition& partition, const WeightField& field,
                 int i) {
    const Grid& g = partition.grid;
    double mass = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        double row = 0.0;
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t idx = g.index(ix, j);
            if (partition.owner[idx] == i) row += field.values[idx];
        }
        mass += row;
    }
    return mass * g.cell_area();
}

std::optional<Vec2> cell_centroid(const VoronoiPartition& partition,
                                  const WeightField& field, int i) {
    const Grid& g = partition.grid;
    double mass = 0.0;
    Vec2 moment{0.0, 0.0};
    for (int j = 0; j < g.ny; ++j) {
        double row_m = 0.0;
        Vec2 row_q{0.0, 0.0};
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t idx = g.index(ix, j);
            if (partition.owner[idx] != i) continue;
            const double w = field.values[idx];
            const Vec2 q = g.center(ix, j);
            row_m += w;
            row_q.x += w * q.x;
            row_q.y += w * q.y;
        }
        mass += row_m;
        moment += row_q;
    }
    if (mass <= 0.0) return std::nullopt;
    return moment / mass;
}

Vec2 nominal_input(const DefenderState& defender, Vec2 centroid, double k) {
    return -k * (defender.position - centroid);
}

double coverage_cost(const std::vector<DefenderState>& defenders,
                     const WeightField& field, int threads) {
    if (defenders.empty())
        throw std::invalid_argument("coverage cost needs at least one defender");
    const Grid& g = field.grid;
    std::vector<double> row_cost(g.ny, 0.0);
    parallel_rows(g.ny, threads, [&](int j) {
        double row = 0.0;
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t idx = g.index(ix, j);
            const double w = field.values[idx];
            const Vec2 q = g.center(ix, j);
            row += w * norm2(q - defenders[nearest_defender(defenders, q)].position);
        }
        row_cost[j] = row;
    });
    double cost = 0.0;
    for (int j = 0; j < g.ny; ++j) cost += row_cost[j];
    return cost * g.cell_area();
}

CoverageMoments coverage_moments(const std::vector<DefenderState>& defenders,
                                 const VoronoiPartition& partition,
                                 const WeightField& field, int threads) {
    const Grid& g = partition.grid;
    const int n = static_cast<int>(defenders.size());

    struct RowAcc {
        std::vector<double> mass;
        std::vector<Vec2> moment;
        double cost = 0.0;
    };
    std::vector<RowAcc> rows(g.ny);
    parallel_rows(g.ny, threads, [&](int j) {
        RowAcc& acc = rows[j];
        acc.mass.assign(n, 0.0);
        acc.moment.assign(n, Vec2{0.0, 0.0});
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t idx = g.index(ix, j);
            const double w = field.values[idx];
            const Vec2 q = g.center(ix, j);
            const int o = partition.owner[idx];
            acc.mass[o] += w;
            acc.moment[o].x += w * q.x;
            acc.moment[o].y += w * q.y;
            acc.cost += w * norm2(q - defenders[o].position);
        }
    });

    CoverageMoments out;
    out.mass.assign(n, 0.0);
    out.centroid.assign(n, Vec2{0.0, 0.0});
    out.degenerate.assign(n, false);
    std::vector<Vec2> moment(n, Vec2{0.0, 0.0});
    for (int j = 0; j < g.ny; ++j) {
        for (int k = 0; k < n; ++k) {
            out.mass[k] += rows[j].mass[k];
            moment[k] += rows[j].moment[k];
        }
        out.cost += rows[j].cost;
    }
    for (int k = 0; k < n; ++k) {
        if (out.mass[k] > 0.0) {
            out.centroid[k] = moment[k] / out.mass[k];
        } else {
            out.centroid[k] = defenders[k].position;
            out.degenerate[k] = true;
        }
        out.mass[k] *= g.cell_area();
    }
    out.cost *= g.cell_area();
    return out;
}

}  // namespace defgen
