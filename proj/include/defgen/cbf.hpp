#pragma once

#include <optional>

#include "defgen/geom.hpp"

namespace defgen {

struct CbfParams {
    double d = 0.01;      // pass-lane ellipse minor height [m]
    double l_min = 1e-6;  // below this endpoint distance there is no lane
    // The class-K map alpha is the identity, alpha(h) = h.
};

// Pass-lane ellipse with the two attackers as major-axis vertices. The
// orientation is kept as cos/sin of the lane angle, never the angle itself,
// so vertical lanes are as well-posed as any other.
struct EllipseCbf {
    Vec2 center;
    double l = 0.0;  // major-axis length = |p2 - p1|
    double d = 0.0;  // minor-axis height
    double cos_t = 1.0;
    double sin_t = 0.0;
    Vec2 p1, p2;  // endpoints (attacker to block, puck holder)
    Vec2 v1, v2;  // endpoint velocities [m/s]
};

// nullopt when the endpoints are closer than l_min ("no pass lane").
std::optional<EllipseCbf> ellipse_from_players(Vec2 p1, Vec2 p2,
                                               const CbfParams& params,
                                               Vec2 v1 = {}, Vec2 v2 = {});

// h = 1 - (X - Xo)^T P (X - Xo); positive strictly inside the ellipse,
// zero on it, negative outside.
double h_ellipse(Vec2 pos, const EllipseCbf& e);

// Coefficients of the expansion
//   dh/dt = a (vx1 + vx2 - 2 vx) + b (vx1 - vx2)
//         + c (vy1 + vy2 - 2 vy) + d (vy2 - vy1)
// equivalently dh/dx = -2a, dh/dy = -2c, dh/dx1 = a + b, dh/dx2 = a - b,
// dh/dy1 = c - d, dh/dy2 = c + d.
struct HGradients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

HGradients h_gradients(Vec2 pos, const EllipseCbf& e);

// Line-based pass-cut barrier, kept as a comparison baseline only. It is
// incalculable for vertical lanes and treats every point near the infinite
// line as safe, even far beyond the two players.
struct LineCbf {
    double delta = 0.0;
    double a = 0.0;  // slope
    double b = 0.0;  // intercept numerator term
};

std::optional<LineCbf> line_cbf_from_players(Vec2 p1, Vec2 p2, double delta);

// h = delta^2 - (a x - y + b)^2 / (a^2 + 1)
double h_line(Vec2 pos, const LineCbf& lc);

struct FilterResult {
    Vec2 u;
    bool active = false;      // constraint was binding
    bool infeasible = false;  // g vanished while the constraint was violated
};

// argmin |u - u_nom|^2  s.t.  g.u + r >= 0, in closed form.
FilterResult project_halfspace(Vec2 u_nom, Vec2 g, double r);

// Safety filter for one pass-cut constraint: minimally modifies u_nom so
// that dh/dt + h >= 0 holds at (pos, e), endpoint motion included.
FilterResult qp_filter(Vec2 u_nom, Vec2 pos, const EllipseCbf& e,
                       const CbfParams& params);

// dh/dt + alpha(h) evaluated at (pos, u, e); diagnostic.
double constraint_residual(Vec2 u, Vec2 pos, const EllipseCbf& e,
                           const CbfParams& params);

}  // namespace defgen
