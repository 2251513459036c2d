#pragma once

#include <string>
#include <vector>

#include "defgen/coverage.hpp"
#include "defgen/engine.hpp"

namespace defgen {

// Full simulation frame: field outline, house boundary, density heatmap,
// Voronoi cell borders, players (defenders blue, holder orange, attackers
// red) and the active pass-lane ellipses drawn to scale.
void render_svg(const OffensiveFrame& frame,
                const std::vector<DefenderState>& defenders,
                const WeightField& phi, const VoronoiPartition& partition,
                const std::vector<PasscutPair>& pairs, const CbfParams& cbf,
                const std::string& path, const FieldSpec& spec = {});

// Weight-field view only: heatmap, house boundary and the offensive players.
void render_weight_svg(const WeightField& phi, const OffensiveFrame& frame,
                       const std::string& path, const FieldSpec& spec = {});

}  // namespace defgen
