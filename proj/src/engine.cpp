#include "defgen/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace defgen {

namespace {

constexpr int kDefenderCount = 5;

Vec2 clamp_to_field(Vec2 p, const FieldSpec& spec) {
    return {std::clamp(p.x, 0.0, spec.width), std::clamp(p.y, 0.0, spec.height)};
}

}  // namespace

std::vector<PasscutPair> select_passcut_pairs(
    const std::vector<DefenderState>& defenders, const OffensiveFrame& frame,
    const CbfParams& cbf, const FieldSpec& field) {
    const OffensivePlayer& holder = frame.holder();

    std::vector<const OffensivePlayer*> o_house;
    for (const auto& p : frame.players)
        if (p.id != frame.puck_holder && in_house_area(p.position))
            o_house.push_back(&p);
    std::sort(o_house.begin(), o_house.end(),
              [](const auto* a, const auto* b) { return a->id < b->id; });

    std::vector<int> d_house;  // indices into defenders
    for (std::size_t k = 0; k < defenders.size(); ++k)
        if (in_house_area(defenders[k].position))
            d_house.push_back(static_cast<int>(k));

    std::vector<PasscutPair> pairs;
    while (!o_house.empty() && !d_house.empty()) {
        // Attacker closest to the goal, lowest id on ties.
        std::size_t best_o = 0;
        double best_dist = norm2(o_house[0]->position - field.goal);
        for (std::size_t k = 1; k < o_house.size(); ++k) {
            const double d2 = norm2(o_house[k]->position - field.goal);
            if (d2 < best_dist) {
                best_dist = d2;
                best_o = k;
            }
        }
        const OffensivePlayer* att = o_house[best_o];

        auto lane = ellipse_from_players(att->position, holder.position, cbf);
        if (!lane) {
            // Attacker on top of the holder: no lane to cut.
            o_house.erase(o_house.begin() + best_o);
            continue;
        }

        // Defender deepest inside the lane, lowest index on ties.
        std::size_t best_d = 0;
        double best_h = h_ellipse(defenders[d_house[0]].position, *lane);
        for (std::size_t k = 1; k < d_house.size(); ++k) {
            const double h = h_ellipse(defenders[d_house[k]].position, *lane);
            if (h > best_h) {
                best_h = h;
                best_d = k;
            }
        }

        pairs.push_back({defenders[d_house[best_d]].id, att->id});
        o_house.erase(o_house.begin() + best_o);
        d_house.erase(d_house.begin() + best_d);
    }
    return pairs;
}

StepResult step(const std::vector<DefenderState>& defenders,
                const OffensiveFrame& frame, const SimParams& params) {
    if (defenders.size() != kDefenderCount)
        throw std::invalid_argument("the simulation runs exactly 5 defenders");
    if (!(params.dt > 0.0) || !(params.k > 0.0))
        throw std::invalid_argument("dt and k must be positive");

    const int n = static_cast<int>(defenders.size());
    const Grid grid = make_grid(params.field, params.grid_resolution);
    const WeightField phi =
        build_weight_field(frame, params.density, grid, params.field, params.threads);
    const VoronoiPartition part = assign_voronoi(defenders, grid, params.threads);
    const CoverageMoments mom =
        coverage_moments(defenders, part, phi, params.threads);

    StepRecord rec;
    rec.t = frame.t;
    rec.defenders = defenders;
    rec.u_nom.resize(n);
    rec.u.resize(n);
    rec.paired_with.assign(n, -1);
    rec.pair_h.assign(n, std::numeric_limits<double>::quiet_NaN());
    rec.clamped.assign(n, false);
    rec.infeasible.assign(n, false);
    rec.coverage_cost = mom.cost;

    for (int i = 0; i < n; ++i)
        rec.u_nom[i] = nominal_input(defenders[i], mom.centroid[i], params.k);

    const std::vector<PasscutPair> pairs =
        select_passcut_pairs(defenders, frame, params.cbf, params.field);
    const OffensivePlayer& holder = frame.holder();

    std::vector<Vec2> u = rec.u_nom;
    for (const PasscutPair& pr : pairs) {
        int i = -1;
        for (int k = 0; k < n; ++k)
            if (defenders[k].id == pr.defender_id) i = k;
        const OffensivePlayer* att = frame.find(pr.offensive_id);
        auto lane = ellipse_from_players(att->position, holder.position, params.cbf,
                                         att->velocity, holder.velocity);
        if (!lane) continue;  // degenerate lane: pair dropped, u_nom kept
        const FilterResult fr = qp_filter(rec.u_nom[i], defenders[i].position,
                                          *lane, params.cbf);
        u[i] = fr.u;
        rec.paired_with[i] = pr.offensive_id;
        rec.pair_h[i] = h_ellipse(defenders[i].position, *lane);
        rec.infeasible[i] = fr.infeasible;
    }

    StepResult out;
    out.defenders = defenders;
    for (int i = 0; i < n; ++i) {
        bool clamped = false;
        u[i] = clamp_speed(u[i], params.field.speed_cap, clamped);
        rec.clamped[i] = clamped;
        rec.u[i] = u[i];
        out.defenders[i].position =
            clamp_to_field(defenders[i].position + u[i] * params.dt, params.field);
    }
    out.record = std::move(rec);
    return out;
}

OffensiveFrame offense_at(const Scene& scene, double t, double dt,
                          double speed_cap) {
    const auto& frames = scene.frames;

    auto position_at = [&frames](double tau, std::size_t player_idx) {
        if (tau <= frames.front().t) return frames.front().players[player_idx].position;
        if (tau >= frames.back().t) return frames.back().players[player_idx].position;
        std::size_t hi = 1;
        while (frames[hi].t < tau) ++hi;
        const auto& f0 = frames[hi - 1];
        const auto& f1 = frames[hi];
        const double w = (tau - f0.t) / (f1.t - f0.t);
        const Vec2 a = f0.players[player_idx].position;
        const Vec2 b = f1.players[player_idx].position;
        return a + w * (b - a);
    };

    OffensiveFrame out;
    out.t = t;
    const bool first = t <= frames.front().t + 1e-9;
    for (std::size_t p = 0; p < frames.front().players.size(); ++p) {
        OffensivePlayer pl;
        pl.id = frames.front().players[p].id;
        pl.position = position_at(t, p);
        if (!first) {
            Vec2 v = (pl.position - position_at(t - dt, p)) / dt;
            const double n = norm(v);
            if (n > speed_cap) v = v * (speed_cap / n);
            pl.velocity = v;
        }
        out.players.push_back(pl);
    }

    // Holder from the latest scene frame not after t.
    out.puck_holder = frames.front().puck_holder;
    for (const auto& f : frames)
        if (f.t <= t + 1e-9) out.puck_holder = f.puck_holder;
    return out;
}

std::vector<DefenderState> default_defenders() {
    std::vector<DefenderState> defs;
    for (int i = 0; i < 5; ++i)
        defs.push_back({i + 1, {10.0, 7.0 + 4.0 * i}});
    return defs;
}

SimTrace run(const Scene& scene, const SimParams& params) {
    validate_scene(scene, params.field);
    if (scene.frames.size() < 2)
        throw SceneError(SceneError::Kind::BadStructure,
                         "replay needs at least 2 frames");

    std::vector<DefenderState> defs;
    const std::vector<Vec2>* init = nullptr;
    if (!params.initial_defenders.empty())
        init = &params.initial_defenders;
    else if (!scene.initial_defenders.empty())
        init = &scene.initial_defenders;
    if (init) {
        if (init->size() != 5)
            throw std::invalid_argument("need exactly 5 initial defender positions");
        for (int i = 0; i < 5; ++i) defs.push_back({i + 1, (*init)[i]});
    } else {
        defs = default_defenders();
    }

    const double t0 = scene.frames.front().t;
    const double t_end = scene.frames.back().t;
    const long n_steps =
        static_cast<long>(std::floor((t_end - t0) / params.dt + 1e-9)) + 1;

    SimTrace trace;
    trace.steps.reserve(n_steps);
    for (long k = 0; k < n_steps; ++k) {
        const double t = t0 + k * params.dt;
        const OffensiveFrame frame =
            offense_at(scene, t, params.dt, params.offense_speed_cap);
        StepResult res = step(defs, frame, params);
        defs = std::move(res.defenders);
        trace.steps.push_back(std::move(res.record));
    }
    return trace;
}

}  // namespace defgen
