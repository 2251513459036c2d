#include "defgen/cbf.hpp"

namespace defgen {

std::optional<EllipseCbf> ellipse_from_players(Vec2 p1, Vec2 p2,
                                               const CbfParams& params,
                                               Vec2 v1, Vec2 v2) {
    const Vec2 diff = p2 - p1;
    const double l = norm(diff);
    if (!(l > params.l_min)) return std::nullopt;
    EllipseCbf e;
    e.center = (p1 + p2) / 2.0;
    e.l = l;
    e.d = params.d;
    e.cos_t = diff.x / l;
    e.sin_t = diff.y / l;
    e.p1 = p1;
    e.p2 = p2;
    e.v1 = v1;
    e.v2 = v2;
    return e;
}

double h_ellipse(Vec2 pos, const EllipseCbf& e) {
    const Vec2 rel = pos - e.center;
    const double s = rel.x * e.cos_t + rel.y * e.sin_t;   // along the lane
    const double t = -rel.x * e.sin_t + rel.y * e.cos_t;  // across it
    const double sa = s / (e.l / 2.0);
    const double tb = t / (e.d / 2.0);
    return 1.0 - sa * sa - tb * tb;
}

HGradients h_gradients(Vec2 pos, const EllipseCbf& e) {
    // Everything is expressed through the endpoint differences
    // u = x2-x1, v = y2-y1; the quadratic-form matrix P depends on the
    // endpoints only through them, which keeps the endpoint partials short.
    const double u = e.p2.x - e.p1.x;
    const double v = e.p2.y - e.p1.y;
    const double l2 = u * u + v * v;
    const double l4 = l2 * l2;
    const double l6 = l4 * l2;
    const double B = 4.0 / (e.d * e.d);  // 1/(d/2)^2

    const double p11 = 4.0 * u * u / l4 + B * v * v / l2;
    const double p12 = 4.0 * u * v / l4 - B * u * v / l2;
    const double p22 = 4.0 * v * v / l4 + B * u * u / l2;

    const double dx = pos.x - e.center.x;
    const double dy = pos.y - e.center.y;

    HGradients out;
    out.a = p11 * dx + p12 * dy;
    out.c = p12 * dx + p22 * dy;

    const double dp11_du = 8.0 * u / l4 - 16.0 * u * u * u / l6 - 2.0 * B * u * v * v / l4;
    const double dp11_dv = -16.0 * u * u * v / l6 + 2.0 * B * v / l2 - 2.0 * B * v * v * v / l4;
    const double dp12_du = 4.0 * v / l4 - 16.0 * u * u * v / l6 - B * v / l2 + 2.0 * B * u * u * v / l4;
    const double dp12_dv = 4.0 * u / l4 - 16.0 * u * v * v / l6 - B * u / l2 + 2.0 * B * u * v * v / l4;
    const double dp22_du = -16.0 * u * v * v / l6 + 2.0 * B * u / l2 - 2.0 * B * u * u * u / l4;
    const double dp22_dv = 8.0 * v / l4 - 16.0 * v * v * v / l6 - 2.0 * B * u * u * v / l4;

    out.b = dx * dx * dp11_du + 2.0 * dx * dy * dp12_du + dy * dy * dp22_du;
    out.d = -(dx * dx * dp11_dv + 2.0 * dx * dy * dp12_dv + dy * dy * dp22_dv);
    return out;
}

std::optional<LineCbf> line_cbf_from_players(Vec2 p1, Vec2 p2, double delta) {
    const double dx = p1.x - p2.x;
    if (std::fabs(dx) < 1e-12) return std::nullopt;  // incalculable
    LineCbf lc;
    lc.delta = delta;
    lc.a = (p1.y - p2.y) / dx;
    lc.b = (p1.x * p2.y - p2.x * p1.y) / dx;
    return lc;
}

double h_line(Vec2 pos, const LineCbf& lc) {
    const double res = lc.a * pos.x - pos.y + lc.b;
    return lc.delta * lc.delta - res * res / (lc.a * lc.a + 1.0);
}

FilterResult project_halfspace(Vec2 u_nom, Vec2 g, double r) {
    const double slack = dot(g, u_nom) + r;
    if (slack >= 0.0) return {u_nom, false, false};
    const double g2 = norm2(g);
    if (g2 < 1e-24) return {u_nom, false, true};
    return {u_nom - (slack / g2) * g, true, false};
}

namespace {

// Constraint in the form g.u + r >= 0: g collects the input terms of
// dh/dt, r the endpoint-motion terms plus alpha(h) = h.
void constraint_terms(Vec2 pos, const EllipseCbf& e, Vec2& g, double& r) {
    const HGradients hg = h_gradients(pos, e);
    g = {-2.0 * hg.a, -2.0 * hg.c};
    r = hg.a * (e.v1.x + e.v2.x) + hg.b * (e.v1.x - e.v2.x) +
        hg.c * (e.v1.y + e.v2.y) + hg.d * (e.v2.y - e.v1.y) + h_ellipse(pos, e);
}

}  // namespace

FilterResult qp_filter(Vec2 u_nom, Vec2 pos, const EllipseCbf& e,
                       const CbfParams&) {
    Vec2 g;
    double r;
    constraint_terms(pos, e, g, r);
    return project_halfspace(u_nom, g, r);
}

double constraint_residual(Vec2 u, Vec2 pos, const EllipseCbf& e,
                           const CbfParams&) {
    Vec2 g;
    double r;
    constraint_terms(pos, e, g, r);
    return dot(g, u) + r;
}

}  // namespace defgen
