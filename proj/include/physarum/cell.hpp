#pragma once

#include <cstdint>
#include <optional>

#include "physarum/neighbourhood.hpp"

namespace physarum {

// Outcome of one reinforcement channel for the action a cell last executed.
enum class Signal : std::uint8_t { none, reward, penalty };

// Pending reinforcement, applied at the start of the next step. The smell
// and wave channels are independent; both refer to the same action index
// (the direction stored in CellState::last_dir).
struct ReinforcementFlags {
    Signal smell = Signal::none;
    Signal wave = Signal::none;

    bool any() const { return smell != Signal::none || wave != Signal::none; }
    bool operator==(const ReinforcementFlags&) const = default;
};

// State of one lattice cell.
struct CellState {
    bool accessible = true;   // corridor (true) or wall (false)
    double mass = 0.0;        // protoplasmic mass concentration
    double smell = 0.0;       // attractant intensity
    ProbabilityVector pv = uniform_probabilities();
    std::optional<std::uint8_t> last_dir;  // neighbour index of the latest incoming transfer
    ReinforcementFlags rf;
};

}  // namespace physarum
