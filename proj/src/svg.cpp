#include "defgen/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "defgen/fmt.hpp"

namespace defgen {

namespace {

constexpr double kScale = 10.0;  // px per meter

struct Canvas {
    std::string body;
    const FieldSpec& spec;

    explicit Canvas(const FieldSpec& s) : spec(s) {}

    double sx(double x) const { return x * kScale; }
    double sy(double y) const { return (spec.height - y) * kScale; }

    void num(double v) { append_fixed(body, v, 2); }

    void rect(double x, double y, double w, double h, const std::string& attrs) {
        body += "<rect x=\"";
        num(x);
        body += "\" y=\"";
        num(y);
        body += "\" width=\"";
        num(w);
        body += "\" height=\"";
        num(h);
        body += "\" " + attrs + "/>\n";
    }

    void line(Vec2 a, Vec2 b, const std::string& attrs) {
        body += "<line x1=\"";
        num(sx(a.x));
        body += "\" y1=\"";
        num(sy(a.y));
        body += "\" x2=\"";
        num(sx(b.x));
        body += "\" y2=\"";
        num(sy(b.y));
        body += "\" " + attrs + "/>\n";
    }

    void circle(Vec2 c, double radius_m, const std::string& attrs) {
        body += "<circle cx=\"";
        num(sx(c.x));
        body += "\" cy=\"";
        num(sy(c.y));
        body += "\" r=\"";
        num(radius_m * kScale);
        body += "\" " + attrs + "/>\n";
    }
};

std::string heat_color(double v) {
    // white -> red ramp
    v = std::clamp(v, 0.0, 1.0);
    const int r = static_cast<int>(255 - 41 * v);
    const int g = static_cast<int>(255 - 215 * v);
    const int b = static_cast<int>(255 - 235 * v);
    return "rgb(" + std::to_string(r) + "," + std::to_string(g) + "," +
           std::to_string(b) + ")";
}

void draw_heatmap(Canvas& cv, const WeightField& phi) {
    const Grid& g = phi.grid;
    double vmax = 0.0;
    for (double v : phi.values) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double v = phi.at(i, j) / vmax;
            cv.rect(cv.sx(i * g.dx), cv.sy((j + 1) * g.dy), g.dx * kScale,
                    g.dy * kScale,
                    "class=\"hm\" fill=\"" + heat_color(v) + "\"");
        }
}

void draw_house(Canvas& cv) {
    // Apex of the two lines, then along y = -x + 20 to the circle, an arc
    // through the circle's rightmost point, back along y = x + 10.
    const Vec2 apex{5.0, 15.0};
    const double r = 15.0;
    const Vec2 center{5.0, 15.0};
    const double a0 = -M_PI / 4.0;
    const double a1 = M_PI / 4.0;
    cv.body += "<path class=\"house\" d=\"M ";
    cv.num(cv.sx(apex.x));
    cv.body += ' ';
    cv.num(cv.sy(apex.y));
    const int segs = 64;
    for (int k = 0; k <= segs; ++k) {
        const double a = a0 + (a1 - a0) * k / segs;
        cv.body += " L ";
        cv.num(cv.sx(center.x + r * std::cos(a)));
        cv.body += ' ';
        cv.num(cv.sy(center.y + r * std::sin(a)));
    }
    cv.body += " Z\" fill=\"none\" stroke=\"#c8a400\" stroke-width=\"2\"/>\n";
}

void draw_field(Canvas& cv) {
    cv.rect(0, 0, cv.spec.width * kScale, cv.spec.height * kScale,
            "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");
    cv.line({cv.spec.active_x_max, 0.0}, {cv.spec.active_x_max, cv.spec.height},
            "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    cv.circle(cv.spec.goal, 0.3, "fill=\"black\"");
}

void draw_players(Canvas& cv, const OffensiveFrame& frame) {
    for (const auto& p : frame.players) {
        const bool holder = p.id == frame.puck_holder;
        cv.circle(p.position, 0.45,
                  holder ? "class=\"holder\" fill=\"#ff7f0e\""
                         : "class=\"attacker\" fill=\"#d62728\"");
    }
}

void draw_voronoi_borders(Canvas& cv, const VoronoiPartition& part) {
    const Grid& g = part.grid;
    const std::string attrs = "stroke=\"#666666\" stroke-width=\"0.7\"";
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i + 1 < g.nx; ++i)
            if (part.owner[g.index(i, j)] != part.owner[g.index(i + 1, j)])
                cv.line({(i + 1) * g.dx, j * g.dy}, {(i + 1) * g.dx, (j + 1) * g.dy},
                        attrs);
    for (int j = 0; j + 1 < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (part.owner[g.index(i, j)] != part.owner[g.index(i, j + 1)])
                cv.line({i * g.dx, (j + 1) * g.dy}, {(i + 1) * g.dx, (j + 1) * g.dy},
                        attrs);
}

void draw_pass_lanes(Canvas& cv, const OffensiveFrame& frame,
                     const std::vector<PasscutPair>& pairs,
                     const CbfParams& cbf) {
    const OffensivePlayer& holder = frame.holder();
    for (const PasscutPair& pr : pairs) {
        const OffensivePlayer* att = frame.find(pr.offensive_id);
        if (!att) continue;
        auto lane = ellipse_from_players(att->position, holder.position, cbf);
        if (!lane) continue;
        const double deg =
            -std::atan2(lane->sin_t, lane->cos_t) * 180.0 / M_PI;  // y is flipped
        cv.body += "<ellipse cx=\"";
        cv.num(cv.sx(lane->center.x));
        cv.body += "\" cy=\"";
        cv.num(cv.sy(lane->center.y));
        cv.body += "\" rx=\"";
        cv.num(lane->l / 2.0 * kScale);
        cv.body += "\" ry=\"";
        cv.num(lane->d / 2.0 * kScale);
        cv.body += "\" transform=\"rotate(";
        cv.num(deg);
        cv.body += ' ';
        cv.num(cv.sx(lane->center.x));
        cv.body += ' ';
        cv.num(cv.sy(lane->center.y));
        cv.body +=
            ")\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    }
}

void write_svg(const Canvas& cv, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << static_cast<int>(cv.spec.width * kScale) << "\" height=\""
        << static_cast<int>(cv.spec.height * kScale) << "\" viewBox=\"0 0 "
        << static_cast<int>(cv.spec.width * kScale) << ' '
        << static_cast<int>(cv.spec.height * kScale) << "\">\n";
    out << cv.body;
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void render_svg(const OffensiveFrame& frame,
                const std::vector<DefenderState>& defenders,
                const WeightField& phi, const VoronoiPartition& partition,
                const std::vector<PasscutPair>& pairs, const CbfParams& cbf,
                const std::string& path, const FieldSpec& spec) {
    Canvas cv(spec);
    draw_heatmap(cv, phi);
    draw_voronoi_borders(cv, partition);
    draw_field(cv);
    draw_house(cv);
    draw_pass_lanes(cv, frame, pairs, cbf);
    draw_players(cv, frame);
    for (const auto& d : defenders)
        cv.circle(d.position, 0.45, "class=\"defender\" fill=\"#1f77b4\"");
    write_svg(cv, path);
}

void render_weight_svg(const WeightField& phi, const OffensiveFrame& frame,
                       const std::string& path, const FieldSpec& spec) {
    Canvas cv(spec);
    draw_heatmap(cv, phi);
    draw_field(cv);
    draw_house(cv);
    draw_players(cv, frame);
    write_svg(cv, path);
}

}  // namespace defgen
