#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "physarum/errors.hpp"
#include "physarum/grid.hpp"

namespace physarum {

// Shape summary of a mass field: ratio of the larger to the smaller principal
// second moment. 1 = isotropic. A field with (near-)zero minor moment but
// nonzero major moment is a line; its ratio diverges and is flagged.
struct Circularity {
    double ratio = 1.0;
    bool degenerate = false;
};

inline Circularity circularity(const std::vector<double>& mass, int width, int height) {
    double total = 0.0;
    double mr = 0.0;
    double mc = 0.0;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const double m = mass[static_cast<std::size_t>(r) * width + c];
            total += m;
            mr += m * r;
            mc += m * c;
        }
    }
    if (total <= 0.0)
        throw ConfigurationError("circularity: zero total mass");
    mr /= total;
    mc /= total;

    double crr = 0.0;
    double ccc = 0.0;
    double crc = 0.0;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const double m = mass[static_cast<std::size_t>(r) * width + c];
            if (m == 0.0) continue;
            const double dr = r - mr;
            const double dc = c - mc;
            crr += m * dr * dr;
            ccc += m * dc * dc;
            crc += m * dr * dc;
        }
    }
    crr /= total;
    ccc /= total;
    crc /= total;

    const double mean = 0.5 * (crr + ccc);
    const double root = std::sqrt(0.25 * (crr - ccc) * (crr - ccc) + crc * crc);
    const double hi = mean + root;
    double lo = mean - root;
    if (lo < 0.0) lo = 0.0;  // covariance is PSD; negatives are round-off

    if (hi <= 0.0) return {1.0, false};  // point mass: no spread, isotropic
    if (lo <= 1e-12 * hi)
        return {std::numeric_limits<double>::infinity(), true};
    return {hi / lo, false};
}

inline Circularity circularity(const Grid& g) {
    std::vector<double> mass(g.cells.size());
    for (std::size_t i = 0; i < g.cells.size(); ++i) mass[i] = g.cells[i].mass;
    return circularity(mass, g.width, g.height);
}

}  // namespace physarum
