#pragma once

#include <vector>

#include "defgen/cbf.hpp"
#include "defgen/coverage.hpp"
#include "defgen/scene.hpp"

namespace defgen {

struct SimParams {
    double k = 1.0;                 // nominal controller gain
    double dt = 0.1;                // [s]
    double grid_resolution = 0.25;  // [m]
    DensityParams density;
    CbfParams cbf;
    FieldSpec field;
    std::vector<Vec2> initial_defenders;  // overrides the scene when set
    double offense_speed_cap = 15.0;      // suppresses extraction-noise spikes
    int threads = 1;
};

struct PasscutPair {
    int defender_id = 0;
    int offensive_id = 0;
};

// Rescales u onto the speed cap when it exceeds it.
inline Vec2 clamp_speed(Vec2 u, double cap, bool& clamped) {
    const double n = norm(u);
    if (n > cap) {
        clamped = true;
        return u * (cap / n);
    }
    return u;
}

// Greedy pass-cut assignment: attackers inside the house, nearest to the
// goal first, each matched with the in-house defender sitting deepest in
// the attacker-to-holder lane. Every id appears at most once and the
// holder is never a target.
std::vector<PasscutPair> select_passcut_pairs(
    const std::vector<DefenderState>& defenders, const OffensiveFrame& frame,
    const CbfParams& cbf, const FieldSpec& field = {});

struct StepRecord {
    double t = 0.0;
    std::vector<DefenderState> defenders;  // state the inputs were computed at
    std::vector<Vec2> u_nom;
    std::vector<Vec2> u;            // filtered and clamped, applied over dt
    std::vector<int> paired_with;   // offensive id, -1 when unpaired
    std::vector<double> pair_h;     // lane h at t for paired defenders
    std::vector<bool> clamped;      // speed cap reduced the input
    std::vector<bool> infeasible;   // filter hit a vanishing gradient
    double coverage_cost = 0.0;
};

struct SimTrace {
    std::vector<StepRecord> steps;
};

struct StepResult {
    std::vector<DefenderState> defenders;
    StepRecord record;
};

// One pass of the per-step loop: density, coverage, pair selection, CBF
// filtering, speed clamp, Euler integration.
StepResult step(const std::vector<DefenderState>& defenders,
                const OffensiveFrame& frame, const SimParams& params);

// Offensive state interpolated to the simulation lattice: positions are
// linear between scene frames, velocities backward differences of the
// interpolated positions (zero on the first step), capped at speed_cap.
OffensiveFrame offense_at(const Scene& scene, double t, double dt,
                          double speed_cap);

std::vector<DefenderState> default_defenders();

// Replays the scene on the dt lattice. Deterministic: identical inputs give
// identical traces for any thread count.
SimTrace run(const Scene& scene, const SimParams& params);

}  // namespace defgen
