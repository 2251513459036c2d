#include "defgen/trace_io.hpp"

#include <fstream>

#include "defgen/fmt.hpp"

namespace defgen {

void write_trace(const SimTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);

    out << "t,defender_id,x,y,ux,uy,paired_with,h,clamped\n";
    std::string line;
    for (const StepRecord& rec : trace.steps) {
        for (std::size_t i = 0; i < rec.defenders.size(); ++i) {
            line.clear();
            append_fixed(line, rec.t, 6);
            line += ',';
            line += std::to_string(rec.defenders[i].id);
            line += ',';
            append_fixed(line, rec.defenders[i].position.x, 6);
            line += ',';
            append_fixed(line, rec.defenders[i].position.y, 6);
            line += ',';
            append_fixed(line, rec.u[i].x, 6);
            line += ',';
            append_fixed(line, rec.u[i].y, 6);
            line += ',';
            if (rec.paired_with[i] >= 0) {
                line += std::to_string(rec.paired_with[i]);
                line += ',';
                append_fixed(line, rec.pair_h[i], 6);
            } else {
                line += ',';
            }
            line += ',';
            line += rec.clamped[i] ? '1' : '0';
            line += '\n';
            out << line;
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace defgen
