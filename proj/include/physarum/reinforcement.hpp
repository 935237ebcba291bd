#pragma once

#include <cassert>
#include <vector>

#include "physarum/grid.hpp"
#include "physarum/neighbourhood.hpp"
#include "physarum/params.hpp"
#include "physarum/transfer.hpp"

namespace physarum {

// Linear reward: the chosen action moves toward 1, the rest shrink by the
// same factor. Maps the probability simplex to itself.
inline ProbabilityVector reward_update(const ProbabilityVector& pv, int k, double reward) {
    assert(k >= 0 && k < kNeighbourCount);
    ProbabilityVector out;
    for (int j = 0; j < kNeighbourCount; ++j) out[j] = (1.0 - reward) * pv[j];
    out[k] = pv[k] + reward * (1.0 - pv[k]);
    return out;
}

// Linear penalty: the chosen action shrinks, the freed probability spreads
// uniformly over the other n-1 actions.
inline ProbabilityVector penalty_update(const ProbabilityVector& pv, int k, double penalty) {
    assert(k >= 0 && k < kNeighbourCount);
    const double share = penalty / (kNeighbourCount - 1);
    ProbabilityVector out;
    for (int j = 0; j < kNeighbourCount; ++j) out[j] = share + (1.0 - penalty) * pv[j];
    out[k] = (1.0 - penalty) * pv[k];
    return out;
}

// Caps the dominant action at `cap`, redistributing the excess over the other
// entries proportionally to their current values (uniformly if all are zero).
// Keeps the argmax and the unit sum; idempotent.
inline ProbabilityVector clamp_pv(const ProbabilityVector& pv, double cap) {
    int arg = 0;
    for (int j = 1; j < kNeighbourCount; ++j)
        if (pv[j] > pv[arg]) arg = j;
    if (pv[arg] <= cap) return pv;

    const double excess = pv[arg] - cap;
    double rest = 0.0;
    for (int j = 0; j < kNeighbourCount; ++j)
        if (j != arg) rest += pv[j];

    ProbabilityVector out;
    if (rest > 0.0) {
        for (int j = 0; j < kNeighbourCount; ++j) out[j] = pv[j] + excess * (pv[j] / rest);
    } else {
        for (int j = 0; j < kNeighbourCount; ++j) out[j] = excess / (kNeighbourCount - 1);
    }
    out[arg] = cap;
    return out;
}

// Grades this step's executed transfers. A transfer A->B is judged at B
// against both guidance fields: the smell channel needs detectable mass and
// smell at B and compares sd(B) with sd(A); the wave channel needs only
// detectable mass and compares wave values, skipping sentinels. Ties leave no
// flag. Flags take effect at the start of the next step.
inline void compute_reinforcement(Grid& g, const std::vector<Transfer>& transfers,
                                  const ReinforcementParams& params) {
    for (const auto& t : transfers) {
        auto& recv = g.cells[t.to];
        if (recv.mass < params.mass_threshold) continue;
        const auto& donor = g.cells[t.from];

        if (recv.smell >= params.smell_threshold) {
            if (recv.smell > donor.smell) recv.rf.smell = Signal::reward;
            else if (recv.smell < donor.smell) recv.rf.smell = Signal::penalty;
        }
        if (g.wave) {
            const double wb = (*g.wave)[t.to];
            const double wa = (*g.wave)[t.from];
            if (wb != kWaveSentinel && wa != kWaveSentinel) {
                if (wb > wa) recv.rf.wave = Signal::reward;
                else if (wb < wa) recv.rf.wave = Signal::penalty;
            }
        }
    }
}

// Applies pending flags to each cell's pv: smell channel first, then wave,
// then the cap; flags and the recorded direction are cleared.
inline void apply_reinforcement(Grid& g, const ReinforcementParams& params) {
    for (auto& cell : g.cells) {
        if (!cell.rf.any()) continue;
        if (!cell.last_dir) {  // flags always ride on a recorded transfer
            cell.rf = {};
            continue;
        }
        const int k = *cell.last_dir;
        if (cell.rf.smell == Signal::reward) cell.pv = reward_update(cell.pv, k, params.reward_smell);
        else if (cell.rf.smell == Signal::penalty)
            cell.pv = penalty_update(cell.pv, k, params.penalty_smell);
        if (cell.rf.wave == Signal::reward) cell.pv = reward_update(cell.pv, k, params.reward_wave);
        else if (cell.rf.wave == Signal::penalty)
            cell.pv = penalty_update(cell.pv, k, params.penalty_wave);
        cell.pv = clamp_pv(cell.pv, params.pv_cap);
        cell.rf = {};
        cell.last_dir.reset();
    }
}

}  // namespace physarum
