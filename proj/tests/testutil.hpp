#pragma once

// Test-side oracles, independent of the library code paths they check.

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "defgen/cbf.hpp"
#include "defgen/coverage.hpp"
#include "defgen/density.hpp"

namespace testutil {

// ---------------------------------------------------------------
// Straight-line reimplementation of the staged weight field. Every
// zone test and gain is recomputed inline from the defining
// inequalities, not through the library.
// ---------------------------------------------------------------
inline double reference_phi(defgen::Vec2 q, const defgen::OffensiveFrame& frame,
                            const defgen::DensityParams& prm,
                            const defgen::FieldSpec& spec) {
    using defgen::Vec2;
    if (q.x > 30.0) return 0.0;

    const std::size_t n = frame.players.size();
    std::vector<double> w(n + 1, 0.0);  // players, then the goal
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 P = frame.players[i].position;
        const Vec2 V = frame.players[i].velocity;
        Vec2 c{P.x + V.x, P.y + V.y};
        const double gx = spec.goal.x - P.x;
        const double gy = spec.goal.y - P.y;
        const double gd = std::sqrt(gx * gx + gy * gy);
        if (gd >= 1e-9) {
            c.x += gx / gd;
            c.y += gy / gd;
        }
        const double d2 = (q.x - c.x) * (q.x - c.x) + (q.y - c.y) * (q.y - c.y);
        w[i] = std::exp(-d2 / (2.0 * prm.sigma));
    }
    {
        const double d2 = (q.x - spec.goal.x) * (q.x - spec.goal.x) +
                          (q.y - spec.goal.y) * (q.y - spec.goal.y);
        w[n] = std::exp(-d2 / (2.0 * prm.sigma));
    }

    // distance gain, players only
    const double goal_dist = std::sqrt((spec.goal.x - q.x) * (spec.goal.x - q.x) +
                                       (spec.goal.y - q.y) * (spec.goal.y - q.y));
    double dg = (prm.distance_norm - goal_dist) / prm.distance_norm;
    if (dg < 0.0) dg = 0.0;
    for (std::size_t i = 0; i < n; ++i) w[i] *= dg;

    // house gain; the goal survives only inside the house
    const bool house = (q.y >= -q.x + 20.0) && (q.y <= q.x + 10.0) &&
                       ((q.x - 5.0) * (q.x - 5.0) + (q.y - 15.0) * (q.y - 15.0) <=
                        225.0);
    if (house) {
        for (std::size_t i = 0; i < n; ++i) w[i] *= prm.p_gain;
        w[n] *= prm.p_gain * prm.goal_house_factor;
    } else {
        w[n] = 0.0;
    }

    // puck priority
    const defgen::OffensivePlayer& holder = frame.holder();
    if (holder.position.x <= 10.0) {
        const bool low = holder.position.y <= 15.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (frame.players[i].id == frame.puck_holder) continue;
            const bool near_half = low ? (q.y < 15.0) : (q.y >= 15.0);
            w[i] *= near_half ? prm.holder_near_gain : prm.holder_far_gain;
        }
        if (low) {
            if (q.y >= 15.0 || q.x >= 10.0) w[n] = 0.0;
        } else {
            if (q.y <= 15.0 || q.x >= 10.0) w[n] = 0.0;
        }
    }

    // blue zone, non-holder players only
    if (q.x >= 14.945 && q.x <= 21.960 && q.y >= 10.0 && q.y <= 20.0)
        for (std::size_t i = 0; i < n; ++i)
            if (frame.players[i].id != frame.puck_holder) w[i] *= prm.low_gain;

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += w[i];
    return total + w[n];
}

// ---------------------------------------------------------------
// Brute-force Voronoi mass/centroid by direct grid summation, same
// quadrature and accumulation order as the library contract
// (per-row partials combined in row order, area applied last).
// ---------------------------------------------------------------
struct OracleCell {
    double mass = 0.0;
    defgen::Vec2 centroid{0.0, 0.0};
    bool empty = true;
};

inline int oracle_nearest(const std::vector<defgen::DefenderState>& defs,
                          defgen::Vec2 q) {
    int best = 0;
    double best_d2 = (q.x - defs[0].position.x) * (q.x - defs[0].position.x) +
                     (q.y - defs[0].position.y) * (q.y - defs[0].position.y);
    for (std::size_t k = 1; k < defs.size(); ++k) {
        const double d2 = (q.x - defs[k].position.x) * (q.x - defs[k].position.x) +
                          (q.y - defs[k].position.y) * (q.y - defs[k].position.y);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = static_cast<int>(k);
        }
    }
    return best;
}

inline OracleCell oracle_cell(const std::vector<defgen::DefenderState>& defs,
                              const defgen::WeightField& field, int target) {
    const defgen::Grid& g = field.grid;
    double mass = 0.0, mx = 0.0, my = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        double rm = 0.0, rx = 0.0, ry = 0.0;
        for (int i = 0; i < g.nx; ++i) {
            const defgen::Vec2 q = g.center(i, j);
            if (oracle_nearest(defs, q) != target) continue;
            const double w = field.values[g.index(i, j)];
            rm += w;
            rx += w * q.x;
            ry += w * q.y;
        }
        mass += rm;
        mx += rx;
        my += ry;
    }
    OracleCell out;
    if (mass > 0.0) {
        out.centroid = {mx / mass, my / mass};
        out.empty = false;
    }
    out.mass = mass * g.cell_area();
    return out;
}

inline double oracle_cost(const std::vector<defgen::DefenderState>& defs,
                          const defgen::WeightField& field) {
    const defgen::Grid& g = field.grid;
    double cost = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        double row = 0.0;
        for (int i = 0; i < g.nx; ++i) {
            const defgen::Vec2 q = g.center(i, j);
            const defgen::Vec2 x = defs[oracle_nearest(defs, q)].position;
            row += field.values[g.index(i, j)] *
                   ((q.x - x.x) * (q.x - x.x) + (q.y - x.y) * (q.y - x.y));
        }
        cost += row;
    }
    return cost * g.cell_area();
}

// ---------------------------------------------------------------
// Central finite differences of h_ellipse in all six coordinates.
// ---------------------------------------------------------------
struct SixPartials {
    double dx, dy, dx1, dy1, dx2, dy2;
};

inline SixPartials fd_partials(defgen::Vec2 X, defgen::Vec2 p1, defgen::Vec2 p2,
                               const defgen::CbfParams& prm, double step) {
    auto H = [&](defgen::Vec2 XX, defgen::Vec2 P1, defgen::Vec2 P2) {
        auto e = defgen::ellipse_from_players(P1, P2, prm);
        return defgen::h_ellipse(XX, *e);
    };
    auto cd = [step](double plus, double minus) { return (plus - minus) / (2.0 * step); };
    SixPartials out;
    out.dx = cd(H({X.x + step, X.y}, p1, p2), H({X.x - step, X.y}, p1, p2));
    out.dy = cd(H({X.x, X.y + step}, p1, p2), H({X.x, X.y - step}, p1, p2));
    out.dx1 = cd(H(X, {p1.x + step, p1.y}, p2), H(X, {p1.x - step, p1.y}, p2));
    out.dy1 = cd(H(X, {p1.x, p1.y + step}, p2), H(X, {p1.x, p1.y - step}, p2));
    out.dx2 = cd(H(X, p1, {p2.x + step, p2.y}), H(X, p1, {p2.x - step, p2.y}));
    out.dy2 = cd(H(X, p1, {p2.x, p2.y + step}), H(X, p1, {p2.x, p2.y - step}));
    return out;
}

// Relative comparison with a floor at the central-difference noise level
// (eps * |h| / step ~ 1e-9, i.e. 1e-3 relative at tol 1e-5): partials that
// pass through zero would otherwise fail on pure oracle roundoff.
inline bool rel_close(double a, double b, double tol) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-3});
    return std::fabs(a - b) <= tol * scale;
}

// ---------------------------------------------------------------
// Grid-search oracle for the half-space projection QP: best feasible
// objective value found on a dense grid around u_nom.
// ---------------------------------------------------------------
inline double qp_grid_best(defgen::Vec2 u_nom, defgen::Vec2 g, double r,
                           double radius, int half_n) {
    double best = std::numeric_limits<double>::infinity();
    const double step = radius / half_n;
    for (int i = -half_n; i <= half_n; ++i)
        for (int j = -half_n; j <= half_n; ++j) {
            const defgen::Vec2 u{u_nom.x + i * step, u_nom.y + j * step};
            if (g.x * u.x + g.y * u.y + r < 0.0) continue;
            const double obj = (u.x - u_nom.x) * (u.x - u_nom.x) +
                               (u.y - u_nom.y) * (u.y - u_nom.y);
            if (obj < best) best = obj;
        }
    return best;
}

// Random non-degenerate player pair with lane length in [l_lo, l_hi];
// a share of the lanes is exactly vertical.
inline void random_lane(std::mt19937& rng, double l_lo, double l_hi,
                        defgen::Vec2& p1, defgen::Vec2& p2) {
    std::uniform_real_distribution<double> pos(2.0, 28.0);
    std::uniform_real_distribution<double> len(l_lo, l_hi);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    p1 = {pos(rng), pos(rng)};
    const double l = len(rng);
    if (coin(rng) < 0.15) {
        p2 = {p1.x, p1.y + l};  // vertical lane
    } else {
        const double a = ang(rng);
        p2 = {p1.x + l * std::cos(a), p1.y + l * std::sin(a)};
    }
}

}  // namespace testutil
