#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "physarum/config.hpp"
#include "physarum/diffusion.hpp"
#include "physarum/geometry.hpp"
#include "physarum/grid.hpp"
#include "physarum/reinforcement.hpp"
#include "physarum/rng.hpp"
#include "physarum/transfer.hpp"
#include "physarum/wave.hpp"

namespace physarum {

// Drives one trial: owns the grid, the derived seed, and the latched output
// state. Step order: apply pending reinforcement, diffuse smell, transfer
// mass, grade the transfers. The caller iterates step() (or calls run()) and
// reads the grid between steps.
class TrialRunner {
  public:
    TrialRunner(const GateGeometry& geometry, const SimConfig& config,
                std::pair<bool, bool> inputs, int trial_index)
        : config_(config),
          inputs_(inputs),
          seed_(derive_seed(config.master_seed, static_cast<std::uint64_t>(trial_index))),
          grid_(init_grid(geometry, config, inputs)) {
        if (config.wave_enabled) grid_.wave = wave_for_inputs(geometry, inputs);
        for (const auto& c : geometry.output_p) output_p_.push_back(grid_.index(c.row, c.col));
        for (const auto& c : geometry.output_q) output_q_.push_back(grid_.index(c.row, c.col));
        check_outputs();  // inputs placed inside an output region latch at step 0
    }

    void step() {
        ++step_count_;
        apply_reinforcement(grid_, config_.reinforcement);
        diffuse_smell(grid_);
        const auto transfers =
            step_mass_transfer(grid_, seed_, static_cast<std::uint64_t>(step_count_), config_);
        compute_reinforcement(grid_, transfers, config_.reinforcement);
        check_outputs();
    }

    bool done() const {
        return step_count_ >= config_.max_steps || (first_p_.has_value() && first_q_.has_value());
    }

    void run() {
        while (!done()) step();
    }

    const Grid& grid() const { return grid_; }
    int step_count() const { return step_count_; }
    std::uint64_t seed() const { return seed_; }
    std::pair<bool, bool> inputs() const { return inputs_; }
    bool p_active() const { return first_p_.has_value(); }
    bool q_active() const { return first_q_.has_value(); }
    std::optional<int> first_activation_p() const { return first_p_; }
    std::optional<int> first_activation_q() const { return first_q_; }

  private:
    void check_outputs() {
        const double threshold = config_.reinforcement.mass_threshold;
        if (!first_p_) {
            for (auto idx : output_p_) {
                if (grid_.cells[idx].mass >= threshold) {
                    first_p_ = step_count_;
                    break;
                }
            }
        }
        if (!first_q_) {
            for (auto idx : output_q_) {
                if (grid_.cells[idx].mass >= threshold) {
                    first_q_ = step_count_;
                    break;
                }
            }
        }
    }

    SimConfig config_;
    std::pair<bool, bool> inputs_;
    std::uint64_t seed_;
    Grid grid_;
    std::vector<std::size_t> output_p_;
    std::vector<std::size_t> output_q_;
    std::optional<int> first_p_;
    std::optional<int> first_q_;
    int step_count_ = 0;
};

}  // namespace physarum
