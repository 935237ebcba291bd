#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "physarum/cell.hpp"
#include "physarum/config.hpp"
#include "physarum/errors.hpp"
#include "physarum/geometry.hpp"

namespace physarum {

// Sentinel for "no wave information" (walls, unreachable cells). Transfers
// touching a sentinel cell never produce wave flags.
inline constexpr double kWaveSentinel = -1.0;

struct Grid {
    int width = 0;
    int height = 0;
    std::vector<CellState> cells;              // row-major
    std::vector<FoodSource> food_sources;
    std::optional<std::vector<double>> wave;   // same shape as cells when present

    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * width + col;
    }
    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height && col >= 0 && col < width;
    }
    CellState& at(int row, int col) { return cells[index(row, col)]; }
    const CellState& at(int row, int col) const { return cells[index(row, col)]; }
    bool accessible(int row, int col) const {
        return in_bounds(row, col) && cells[index(row, col)].accessible;
    }

    double total_mass() const {
        double sum = 0.0;
        for (const auto& c : cells) sum += c.mass;
        return sum;
    }
    double total_smell() const {
        double sum = 0.0;
        for (const auto& c : cells) sum += c.smell;
        return sum;
    }
};

// Builds the step-0 grid: uniform pv on corridors, initial mass on the
// activated input sites, smell seeded at the food sources.
inline Grid init_grid(const GateGeometry& geometry, const SimConfig& config,
                      std::pair<bool, bool> inputs) {
    if (geometry.width <= 0 || geometry.height <= 0)
        throw ConfigurationError("init_grid: empty geometry");
    if (config.reinforcement.mass_threshold <= 0 || config.reinforcement.smell_threshold <= 0)
        throw ConfigurationError("init_grid: thresholds must be positive");

    Grid g;
    g.width = geometry.width;
    g.height = geometry.height;
    g.cells.assign(static_cast<std::size_t>(g.width) * g.height, CellState{});
    for (int r = 0; r < g.height; ++r)
        for (int c = 0; c < g.width; ++c)
            g.at(r, c).accessible = geometry.accessible(r, c);

    if (inputs.first) {
        if (!geometry.accessible(geometry.input_x))
            throw ConfigurationError("init_grid: activated input x is not accessible");
        g.at(geometry.input_x.row, geometry.input_x.col).mass = config.initial_mass;
    }
    if (inputs.second) {
        if (!geometry.accessible(geometry.input_y))
            throw ConfigurationError("init_grid: activated input y is not accessible");
        // input sites are distinct by geometry invariant, so += equals =
        g.at(geometry.input_y.row, geometry.input_y.col).mass += config.initial_mass;
    }

    for (const auto& fs : config.food_placement) {
        if (!g.in_bounds(fs.at.row, fs.at.col) || !g.at(fs.at.row, fs.at.col).accessible)
            throw ConfigurationError("init_grid: food source at (" + std::to_string(fs.at.row) +
                                     "," + std::to_string(fs.at.col) +
                                     ") is not an accessible cell");
        auto& cell = g.at(fs.at.row, fs.at.col);
        cell.smell = std::max(cell.smell, fs.strength);
        g.food_sources.push_back(fs);
    }
    return g;
}

}  // namespace physarum
