#include "core/variables.hpp"

namespace heckelab {

namespace {
constexpr const char* kNames[kVarCount] = {
    "p",  "u",   "x0",  "x1", "x2", "x3", "y0",  "y1",  "y2",  "y3", "X",
    "at", "ak",  "Tx",  "T1x", "T2x", "Px", "Ty",  "T1y", "T2y", "Py",
};
}  // namespace

const char* var_name(Var v) { return kNames[var_index(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
    for (int i = 0; i < kVarCount; ++i)
        if (name == kNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

}  // namespace heckelab
