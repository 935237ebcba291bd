#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "physarum/grid.hpp"

namespace physarum {

// Binary 8-bit portable graymap. Returns the complete file contents.
inline std::string encode_pgm(const std::vector<std::uint8_t>& pixels, int width, int height) {
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
    return out;
}

// Scalar field scaled linearly from 0 to the frame's own maximum; walls and
// all-zero frames render black. The scale factor (the max) is recoverable
// from the metrics table.
inline std::string render_field_frame(const Grid& g, const std::vector<double>& field) {
    double max = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i)
        if (g.cells[i].accessible && field[i] > max) max = field[i];

    std::vector<std::uint8_t> px(field.size(), 0);
    if (max > 0.0) {
        for (std::size_t i = 0; i < field.size(); ++i) {
            if (!g.cells[i].accessible || field[i] <= 0.0) continue;
            px[i] = static_cast<std::uint8_t>(std::llround(field[i] / max * 255.0));
        }
    }
    return encode_pgm(px, g.width, g.height);
}

inline std::string render_mass_frame(const Grid& g) {
    std::vector<double> f(g.cells.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = g.cells[i].mass;
    return render_field_frame(g, f);
}

inline std::string render_smell_frame(const Grid& g) {
    std::vector<double> f(g.cells.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = g.cells[i].smell;
    return render_field_frame(g, f);
}

// Wave debug frame: bright at the origin, fading with distance; walls and
// unreachable cells black.
inline std::string render_wave_frame(const std::vector<double>& wave, int width, int height) {
    double max = 0.0;
    for (double v : wave)
        if (v > max) max = v;

    std::vector<std::uint8_t> px(wave.size(), 0);
    for (std::size_t i = 0; i < wave.size(); ++i) {
        if (wave[i] < 0.0) continue;  // sentinel
        px[i] = max > 0.0
                    ? static_cast<std::uint8_t>(55 + std::llround((1.0 - wave[i] / max) * 200.0))
                    : 255;
    }
    return encode_pgm(px, width, height);
}

}  // namespace physarum
