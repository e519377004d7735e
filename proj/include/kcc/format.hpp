#pragma once

#include <cstdio>
#include <string>

namespace kcc {

// Shortest-ish round-trippable rendering used by reports and witnesses.
inline std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace kcc
