#pragma once

#include <string>

#include "defgen/engine.hpp"

namespace defgen {

// CSV trace, header "t,defender_id,x,y,ux,uy,paired_with,h,clamped".
// One row per defender per step, time-major then defender id, floats with
// six decimals, empty paired_with/h for unpaired defenders. Byte-identical
// across re-runs.
void write_trace(const SimTrace& trace, const std::string& path);

}  // namespace defgen
