#pragma once

#include <array>
#include <cstdint>

namespace physarum {

// Moore neighbourhood, enumerated row-major around the centre cell.
// Index k maps to a (di, dj) offset with i = row (north = 0), j = column
// (west = 0). The ordering is fixed so that probability-vector indices stay
// stable across runs and serialized state.
//
//     0 1 2
//     3 . 4
//     5 6 7
inline constexpr int kNeighbourCount = 8;

struct Offset {
    int di;
    int dj;
};

inline constexpr std::array<Offset, kNeighbourCount> kNeighbourOffsets = {{
    {-1, -1}, {-1, 0}, {-1, +1},
    {0, -1},           {0, +1},
    {+1, -1}, {+1, 0}, {+1, +1},
}};

// The offset table is centrally symmetric, so the opposite direction is the
// mirrored index: opposite(0) = 7, opposite(1) = 6, ...
constexpr int opposite(int k) { return kNeighbourCount - 1 - k; }

// Per-cell action probabilities: entry k is the probability of receiving
// mass from neighbour k.
using ProbabilityVector = std::array<double, kNeighbourCount>;

constexpr ProbabilityVector uniform_probabilities()
{
    ProbabilityVector pv{};
    pv.fill(1.0 / kNeighbourCount);
    return pv;
}

}  // namespace physarum
