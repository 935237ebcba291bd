#pragma once

#include <cstdint>

namespace physarum {

// Counter-based random numbers. Every draw is a pure function of
// (stream seed, step index, cell index), so per-cell work can be skipped,
// reordered, or executed in parallel without perturbing any other cell's
// stream. This is what makes trial trajectories bit-reproducible.

namespace detail {

// splitmix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

// Deterministic sub-seed, e.g. the seed of trial n within an experiment.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt)
{
    return detail::mix64(detail::mix64(base) ^ (salt * 0xd1b54a32d192ed03ULL));
}

// Uniform draw in [0, 1) for one cell at one step.
constexpr double cell_draw(std::uint64_t seed, std::uint64_t step, std::uint64_t cell)
{
    std::uint64_t h = detail::mix64(seed ^ (step * 0xa0761d6478bd642fULL));
    h = detail::mix64(h ^ (cell * 0xe7037ed1a0b428dbULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace physarum
