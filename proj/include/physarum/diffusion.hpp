#pragma once

#include <algorithm>
#include <vector>

#include "physarum/grid.hpp"

namespace physarum {

// 3x3 smell kernel, total weight 36.
inline constexpr int kSmellKernel[3][3] = {{1, 4, 1}, {4, 16, 4}, {1, 4, 1}};

// One diffusion step with zero-flux boundaries: the weight of every wall or
// out-of-bounds neighbour is folded into the centre weight, which makes the
// update a doubly-stochastic mixing of the accessible region, so total smell
// is conserved exactly. Food sources replenish afterwards.
inline void diffuse_smell(Grid& g) {
    static thread_local std::vector<double> next;
    next.assign(g.cells.size(), 0.0);

    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            const auto idx = g.index(r, c);
            if (!g.cells[idx].accessible) continue;
            int centre_weight = kSmellKernel[1][1];
            double acc = 0.0;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const int w = kSmellKernel[dr + 1][dc + 1];
                    if (g.accessible(r + dr, c + dc))
                        acc += w * g.cells[g.index(r + dr, c + dc)].smell;
                    else
                        centre_weight += w;
                }
            }
            acc += centre_weight * g.cells[idx].smell;
            next[idx] = acc / 36.0;
        }
    }

    for (std::size_t i = 0; i < next.size(); ++i)
        if (g.cells[i].accessible) g.cells[i].smell = next[i];

    for (const auto& fs : g.food_sources) {
        auto& cell = g.at(fs.at.row, fs.at.col);
        cell.smell = std::max(cell.smell, fs.strength);
    }
}

}  // namespace physarum
