#pragma once

#include <charconv>
#include <string>

namespace defgen {

// Locale-independent number formatting (always '.' as decimal separator).

inline void append_fixed(std::string& out, double v, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::fixed, precision);
    out.append(buf, res.ptr);
}

inline std::string fmt_fixed(double v, int precision) {
    std::string s;
    append_fixed(s, v, precision);
    return s;
}

inline void append_shortest(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

}  // namespace defgen
