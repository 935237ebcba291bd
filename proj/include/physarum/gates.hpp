#pragma once

#include <string>
#include <string_view>

#include "physarum/errors.hpp"
#include "physarum/gate_layouts.hpp"  // generated from data/gates/*.maze
#include "physarum/geometry.hpp"

namespace physarum {

// Shipped reference layouts. The authoritative copies are the maze files
// under data/gates/; the build embeds them verbatim.
inline GateGeometry bundled_gate(std::string_view name) {
    if (name == "P1") return parse_maze(embedded::kGateP1, "P1");
    if (name == "P2") return parse_maze(embedded::kGateP2, "P2");
    throw ConfigurationError("bundled_gate: unknown gate '" + std::string(name) +
                             "' (expected P1 or P2)");
}

}  // namespace physarum
