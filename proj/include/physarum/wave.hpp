#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "physarum/errors.hpp"
#include "physarum/geometry.hpp"
#include "physarum/grid.hpp"
#include "physarum/neighbourhood.hpp"

namespace physarum {

// Geodesic (8-connected, unit-cost) distance from origin through accessible
// cells; breadth-first search. Walls and unreachable cells carry kWaveSentinel.
inline std::vector<double> generate_wave_field(const GateGeometry& geometry, Coord origin) {
    if (!geometry.accessible(origin))
        throw ConfigurationError("generate_wave_field: origin (" + std::to_string(origin.row) +
                                 "," + std::to_string(origin.col) + ") is not accessible");

    std::vector<double> field(static_cast<std::size_t>(geometry.width) * geometry.height,
                              kWaveSentinel);
    auto index = [&geometry](int r, int c) {
        return static_cast<std::size_t>(r) * geometry.width + c;
    };

    std::deque<Coord> frontier;
    field[index(origin.row, origin.col)] = 0.0;
    frontier.push_back(origin);
    while (!frontier.empty()) {
        const Coord cur = frontier.front();
        frontier.pop_front();
        const double next = field[index(cur.row, cur.col)] + 1.0;
        for (const auto& off : kNeighbourOffsets) {
            const int r = cur.row + off.di;
            const int c = cur.col + off.dj;
            if (!geometry.accessible(r, c)) continue;
            if (field[index(r, c)] != kWaveSentinel) continue;
            field[index(r, c)] = next;
            frontier.push_back({r, c});
        }
    }
    return field;
}

// Pointwise minimum of two wave fields, ignoring sentinels. Models fronts
// from several origins meeting: each cell keeps the first front to arrive.
inline void min_combine_wave(std::vector<double>& into, const std::vector<double>& other) {
    for (std::size_t i = 0; i < into.size(); ++i) {
        if (other[i] == kWaveSentinel) continue;
        if (into[i] == kWaveSentinel || other[i] < into[i]) into[i] = other[i];
    }
}

// Wave guidance field for a trial: one front per activated input, combined by
// first arrival. No activated input (or wave disabled upstream) -> no field.
inline std::optional<std::vector<double>> wave_for_inputs(const GateGeometry& geometry,
                                                          std::pair<bool, bool> inputs) {
    std::optional<std::vector<double>> field;
    if (inputs.first) field = generate_wave_field(geometry, geometry.input_x);
    if (inputs.second) {
        auto fy = generate_wave_field(geometry, geometry.input_y);
        if (field) min_combine_wave(*field, fy);
        else field = std::move(fy);
    }
    return field;
}

}  // namespace physarum
