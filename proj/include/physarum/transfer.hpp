#pragma once

#include <cstdint>
#include <vector>

#include "physarum/config.hpp"
#include "physarum/grid.hpp"
#include "physarum/neighbourhood.hpp"
#include "physarum/rng.hpp"

namespace physarum {

// One executed mass movement. `action` is the receiver's pv index, i.e. the
// direction of the donor as seen from the receiver.
struct Transfer {
    std::int32_t from;   // donor cell index
    std::int32_t to;     // receiver cell index
    std::uint8_t action;
    double amount;       // after phase-2 scaling
};

// Synchronous two-phase transfer step. Phase 1: every accessible cell samples
// one neighbour from its pv and requests transfer_fraction x that donor's old
// mass if the donor holds at least mass_threshold. Phase 2: donors whose
// requests exceed their old mass scale all outflows proportionally, then all
// transfers apply simultaneously. Receivers record the sampled direction.
// Total mass is conserved.
//
// Draws come from a counter-based stream keyed on (seed, step, cell), so
// skipping cells that cannot execute a transfer this step (no neighbour at or
// above mass_threshold) does not perturb any other cell's draw.
inline std::vector<Transfer> step_mass_transfer(Grid& g, std::uint64_t seed, std::uint64_t step,
                                                const SimConfig& config) {
    const double threshold = config.reinforcement.mass_threshold;
    const std::size_t n = g.cells.size();

    static thread_local std::vector<char> active;
    active.assign(n, 0);
    bool any_rich = false;
    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            const auto idx = g.index(r, c);
            if (!g.cells[idx].accessible || g.cells[idx].mass < threshold) continue;
            any_rich = true;
            for (const auto& off : kNeighbourOffsets) {
                const int rr = r + off.di;
                const int cc = c + off.dj;
                if (g.accessible(rr, cc)) active[g.index(rr, cc)] = 1;
            }
        }
    }
    std::vector<Transfer> transfers;
    if (!any_rich) return transfers;

    // Phase 1: sampling against the old mass field.
    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            const auto idx = g.index(r, c);
            if (!active[idx]) continue;
            const auto& cell = g.cells[idx];

            const double u = cell_draw(seed, step, idx);
            int k = 0;
            double cum = 0.0;
            for (; k < kNeighbourCount - 1; ++k) {
                cum += cell.pv[k];
                if (u < cum) break;
            }
            const int dr = r + kNeighbourOffsets[k].di;
            const int dc = c + kNeighbourOffsets[k].dj;
            if (!g.accessible(dr, dc)) continue;
            const auto donor = g.index(dr, dc);
            if (g.cells[donor].mass < threshold) continue;
            transfers.push_back({static_cast<std::int32_t>(donor), static_cast<std::int32_t>(idx),
                                 static_cast<std::uint8_t>(k),
                                 config.transfer_fraction * g.cells[donor].mass});
        }
    }

    // Phase 2: proportional scaling where requests exceed the donor's mass.
    static thread_local std::vector<double> outflow;
    outflow.assign(n, 0.0);
    for (const auto& t : transfers) outflow[t.from] += t.amount;

    static thread_local std::vector<double> delta;
    delta.assign(n, 0.0);
    for (auto& t : transfers) {
        const double total = outflow[t.from];
        if (total > g.cells[t.from].mass) t.amount *= g.cells[t.from].mass / total;
        delta[t.from] -= t.amount;
        delta[t.to] += t.amount;
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (delta[i] == 0.0) continue;
        auto& cell = g.cells[i];
        cell.mass += delta[i];
        if (cell.mass < 0.0) cell.mass = 0.0;  // scaling round-off only
    }
    for (const auto& t : transfers) g.cells[t.to].last_dir = t.action;

    return transfers;
}

}  // namespace physarum
