#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "physarum/config.hpp"
#include "physarum/geometry.hpp"
#include "physarum/simulation.hpp"

namespace physarum {

struct TrialResult {
    bool p = false;
    bool q = false;
    std::optional<int> first_activation_p;
    std::optional<int> first_activation_q;
    std::vector<double> final_mass;  // row-major snapshot
    std::uint64_t seed = 0;
    int executed_steps = 0;
};

// Occurrence counts of the four output pairs for one input pair.
struct OutputCounts {
    std::array<std::array<int, 2>, 2> count{};  // [p][q]
    int trials = 0;

    void add(bool p, bool q) {
        ++count[p ? 1 : 0][q ? 1 : 0];
        ++trials;
    }
    // Modal output pair; deterministic tie-break toward <0,0>, <0,1>, <1,0>, <1,1>.
    std::pair<bool, bool> modal() const {
        std::pair<bool, bool> best{false, false};
        int best_count = -1;
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
                if (count[p][q] > best_count) {
                    best_count = count[p][q];
                    best = {p != 0, q != 0};
                }
        return best;
    }
    int modal_count() const {
        const auto m = modal();
        return count[m.first ? 1 : 0][m.second ? 1 : 0];
    }
};

// Rows indexed by input pair: <0,0>, <0,1>, <1,0>, <1,1>.
struct FrequencyTable {
    std::array<OutputCounts, 4> rows{};

    static int input_index(std::pair<bool, bool> inputs) {
        return (inputs.first ? 2 : 0) + (inputs.second ? 1 : 0);
    }
    static std::pair<bool, bool> index_input(int idx) {
        return {(idx & 2) != 0, (idx & 1) != 0};
    }
    OutputCounts& row(std::pair<bool, bool> inputs) { return rows[input_index(inputs)]; }
    const OutputCounts& row(std::pair<bool, bool> inputs) const {
        return rows[input_index(inputs)];
    }
};

inline TrialResult run_trial(const SimConfig& config, const GateGeometry& geometry,
                             std::pair<bool, bool> inputs, int trial_index) {
    TrialRunner runner(geometry, config, inputs, trial_index);
    runner.run();
    TrialResult res;
    res.p = runner.p_active();
    res.q = runner.q_active();
    res.first_activation_p = runner.first_activation_p();
    res.first_activation_q = runner.first_activation_q();
    res.seed = runner.seed();
    res.executed_steps = runner.step_count();
    res.final_mass.reserve(runner.grid().cells.size());
    for (const auto& c : runner.grid().cells) res.final_mass.push_back(c.mass);
    return res;
}

// config.trials independent trials with derived seeds, aggregated into one
// frequency-table row. Trials are independent, so the aggregate does not
// depend on execution order.
inline OutputCounts run_experiment(const SimConfig& config, const GateGeometry& geometry,
                                   std::pair<bool, bool> inputs) {
    OutputCounts counts;
    for (int t = 0; t < config.trials; ++t) {
        const TrialResult r = run_trial(config, geometry, inputs, t);
        counts.add(r.p, r.q);
    }
    return counts;
}

inline FrequencyTable truth_table(const SimConfig& config, const GateGeometry& geometry) {
    FrequencyTable table;
    for (int idx = 0; idx < 4; ++idx) {
        const auto inputs = FrequencyTable::index_input(idx);
        table.rows[idx] = run_experiment(config, geometry, inputs);
    }
    return table;
}

}  // namespace physarum
