#include "defgen/density.hpp"

#include <fstream>
#include <stdexcept>

#include "defgen/fmt.hpp"
#include "defgen/parallel.hpp"

namespace defgen {

const OffensivePlayer* OffensiveFrame::find(int id) const {
    for (const auto& p : players)
        if (p.id == id) return &p;
    return nullptr;
}

const OffensivePlayer& OffensiveFrame::holder() const {
    const OffensivePlayer* p = find(puck_holder);
    if (!p) throw std::invalid_argument("puck holder id not among players");
    return *p;
}

Vec2 weight_center(Vec2 position, Vec2 velocity, Vec2 goal) {
    const Vec2 to_goal = goal - position;
    const double dist = norm(to_goal);
    if (dist < 1e-9) return position + velocity;
    return position + to_goal / dist + velocity;
}

double gaussian_bump(Vec2 q, Vec2 center, double sigma) {
    return std::exp(-norm2(q - center) / (2.0 * sigma));
}

double distance_gain(Vec2 q, Vec2 goal, double norm_len) {
    const double g = (norm_len - norm(goal - q)) / norm_len;
    return g > 0.0 ? g : 0.0;
}

double weight_field_at(Vec2 q, const OffensiveFrame& frame,
                       const DensityParams& params, const FieldSpec& spec) {
    if (q.x > spec.active_x_max) return 0.0;

    const OffensivePlayer& holder = frame.holder();
    const bool priority = holder.position.x <= 10.0;
    const bool holder_low = holder.position.y <= 15.0;
    const bool house = in_house_area(q);
    const bool low_zone = in_low_gain_zone(q);
    const double dg = distance_gain(q, spec.goal, params.distance_norm);

    double total = 0.0;
    for (const auto& p : frame.players) {
        double w = gaussian_bump(q, weight_center(p.position, p.velocity, spec.goal),
                                 params.sigma);
        w *= dg;
        if (house) w *= params.p_gain;
        if (p.id != frame.puck_holder) {
            if (priority) {
                const bool near_half = holder_low ? (q.y < 15.0) : (q.y >= 15.0);
                w *= near_half ? params.holder_near_gain : params.holder_far_gain;
            }
            if (low_zone) w *= params.low_gain;
        }
        total += w;
    }

    // The goal acts as one more source: bump at the goal itself, kept only
    // inside the house and only on the holder's half under puck priority.
    double wg = gaussian_bump(q, spec.goal, params.sigma);
    if (house)
        wg *= params.p_gain * params.goal_house_factor;
    else
        wg = 0.0;
    if (priority) {
        if (holder_low) {
            if (q.y >= 15.0 || q.x >= 10.0) wg = 0.0;
        } else {
            if (q.y <= 15.0 || q.x >= 10.0) wg = 0.0;
        }
    }
    return total + wg;
}

WeightField build_weight_field(const OffensiveFrame& frame,
                               const DensityParams& params, const Grid& grid,
                               const FieldSpec& spec, int threads) {
    if (!frame.find(frame.puck_holder))
        throw std::invalid_argument("puck holder id not among players");
    for (const auto& p : frame.players)
        if (!is_finite(p.position) || !is_finite(p.velocity))
            throw std::invalid_argument("non-finite offensive player state");

    WeightField field;
    field.grid = grid;
    field.values.assign(grid.cell_count(), 0.0);
    parallel_rows(grid.ny, threads, [&](int j) {
        for (int i = 0; i < grid.nx; ++i)
            field.values[grid.index(i, j)] =
                weight_field_at(grid.center(i, j), frame, params, spec);
    });
    return field;
}

void write_weight_csv(const WeightField& field, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    std::string line;
    out << "x,y,value\n";
    for (int j = 0; j < field.grid.ny; ++j)
        for (int i = 0; i < field.grid.nx; ++i) {
            const Vec2 c = field.grid.center(i, j);
            line.clear();
            append_shortest(line, c.x);
            line += ',';
            append_shortest(line, c.y);
            line += ',';
            append_shortest(line, field.at(i, j));
            line += '\n';
            out << line;
        }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace defgen
