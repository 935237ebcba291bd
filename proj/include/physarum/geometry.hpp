#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "physarum/errors.hpp"
#include "physarum/neighbourhood.hpp"

namespace physarum {

struct Coord {
    int row = 0;
    int col = 0;

    bool operator==(const Coord&) const = default;
};

// Accessibility mask plus the two input sites and the two output detection
// regions of a gate. Immutable after construction.
struct GateGeometry {
    int width = 0;   // columns
    int height = 0;  // rows
    std::vector<char> mask;  // row-major, 1 = corridor, 0 = wall
    Coord input_x;
    Coord input_y;
    std::vector<Coord> output_p;
    std::vector<Coord> output_q;
    std::string name;

    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height && col >= 0 && col < width;
    }
    bool accessible(int row, int col) const {
        return in_bounds(row, col) && mask[static_cast<std::size_t>(row) * width + col] != 0;
    }
    bool accessible(Coord c) const { return accessible(c.row, c.col); }
};

namespace detail {

inline bool contains(const std::vector<Coord>& v, Coord c) {
    return std::find(v.begin(), v.end(), c) != v.end();
}

inline bool has_accessible_neighbour(const GateGeometry& g, Coord c) {
    for (const auto& off : kNeighbourOffsets) {
        if (g.accessible(c.row + off.di, c.col + off.dj)) return true;
    }
    return false;
}

}  // namespace detail

// Validates the cross-field invariants of an assembled geometry. parse_maze
// calls this; hand-built geometries in tests may call it directly.
inline void validate_geometry(const GateGeometry& g) {
    if (g.width <= 0 || g.height <= 0)
        throw ParseError(g.name + ": empty geometry");
    if (g.mask.size() != static_cast<std::size_t>(g.width) * g.height)
        throw ParseError(g.name + ": mask size does not match dimensions");
    if (g.input_x == g.input_y)
        throw ParseError(g.name + ": input sites x and y coincide");
    if (!g.accessible(g.input_x)) throw ParseError(g.name + ": input x on an inaccessible cell");
    if (!g.accessible(g.input_y)) throw ParseError(g.name + ": input y on an inaccessible cell");
    if (g.output_p.empty()) throw ParseError(g.name + ": empty P output region");
    if (g.output_q.empty()) throw ParseError(g.name + ": empty Q output region");
    for (const auto& c : g.output_p) {
        if (!g.accessible(c)) throw ParseError(g.name + ": P output cell on an inaccessible cell");
        if (detail::contains(g.output_q, c))
            throw ParseError(g.name + ": output regions P and Q overlap");
    }
    for (const auto& c : g.output_q) {
        if (!g.accessible(c)) throw ParseError(g.name + ": Q output cell on an inaccessible cell");
    }
    // An input with no accessible neighbour could never emit mass.
    if (!detail::has_accessible_neighbour(g, g.input_x))
        throw ParseError(g.name + ": input x has no accessible neighbour");
    if (!detail::has_accessible_neighbour(g, g.input_y))
        throw ParseError(g.name + ": input y has no accessible neighbour");
}

// Parses the maze text format: one character per cell, newline-terminated
// rows of equal length. '#' wall, '.' corridor, 'X'/'Y' input sites,
// 'P'/'Q' output-region cells (all marker cells are corridors).
inline GateGeometry parse_maze(std::string_view text, std::string name = "maze") {
    GateGeometry g;
    g.name = std::move(name);

    std::vector<std::string_view> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view row = text.substr(pos, nl - pos);
        if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        if (!row.empty()) rows.push_back(row);
        else if (nl != text.size())
            throw ParseError(g.name + ": empty row " + std::to_string(rows.size() + 1));
        pos = nl + 1;
    }
    if (rows.empty()) throw ParseError(g.name + ": document has no rows");

    g.height = static_cast<int>(rows.size());
    g.width = static_cast<int>(rows[0].size());
    g.mask.assign(static_cast<std::size_t>(g.width) * g.height, 0);

    int seen_x = 0;
    int seen_y = 0;
    for (int r = 0; r < g.height; ++r) {
        if (static_cast<int>(rows[r].size()) != g.width)
            throw ParseError(g.name + ": ragged row " + std::to_string(r + 1) + " (length " +
                             std::to_string(rows[r].size()) + ", expected " +
                             std::to_string(g.width) + ")");
        for (int c = 0; c < g.width; ++c) {
            const char ch = rows[r][c];
            const std::size_t idx = static_cast<std::size_t>(r) * g.width + c;
            switch (ch) {
                case '#': break;
                case '.': g.mask[idx] = 1; break;
                case 'X':
                    g.mask[idx] = 1;
                    g.input_x = {r, c};
                    ++seen_x;
                    break;
                case 'Y':
                    g.mask[idx] = 1;
                    g.input_y = {r, c};
                    ++seen_y;
                    break;
                case 'P':
                    g.mask[idx] = 1;
                    g.output_p.push_back({r, c});
                    break;
                case 'Q':
                    g.mask[idx] = 1;
                    g.output_q.push_back({r, c});
                    break;
                default:
                    throw ParseError(g.name + ": unknown character '" + std::string(1, ch) +
                                     "' at row " + std::to_string(r + 1) + ", column " +
                                     std::to_string(c + 1));
            }
        }
    }
    if (seen_x == 0) throw ParseError(g.name + ": missing input site X");
    if (seen_x > 1) throw ParseError(g.name + ": duplicate input site X");
    if (seen_y == 0) throw ParseError(g.name + ": missing input site Y");
    if (seen_y > 1) throw ParseError(g.name + ": duplicate input site Y");

    validate_geometry(g);
    return g;
}

// Inverse of parse_maze, byte-exact for round-tripping.
inline std::string serialize_maze(const GateGeometry& g) {
    std::string out;
    out.reserve(static_cast<std::size_t>(g.height) * (g.width + 1));
    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            char ch = g.accessible(r, c) ? '.' : '#';
            const Coord here{r, c};
            if (here == g.input_x) ch = 'X';
            else if (here == g.input_y) ch = 'Y';
            else if (detail::contains(g.output_p, here)) ch = 'P';
            else if (detail::contains(g.output_q, here)) ch = 'Q';
            out.push_back(ch);
        }
        out.push_back('\n');
    }
    return out;
}

// Fully accessible rectangle with inputs/outputs in the corners; used for
// free-medium experiments where the gate wiring is irrelevant.
inline GateGeometry open_geometry(int width, int height) {
    GateGeometry g;
    g.name = "open";
    g.width = width;
    g.height = height;
    g.mask.assign(static_cast<std::size_t>(width) * height, 1);
    g.input_x = {height / 2, width / 2};
    g.input_y = {0, 0};
    g.output_p = {{height - 1, width - 1}};
    g.output_q = {{height - 1, width - 2}};
    validate_geometry(g);
    return g;
}

}  // namespace physarum
