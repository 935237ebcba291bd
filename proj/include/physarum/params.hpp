#pragma once

namespace physarum {

// Learning factors and detection thresholds of the reinforcement scheme.
// Invariant: pv_cap + pv_rest_floor = 1; all four factors strictly in (0,1).
struct ReinforcementParams {
    double reward_smell = 0.15;
    double penalty_smell = 0.05;
    double reward_wave = 0.3;
    double penalty_wave = 0.3;
    double pv_cap = 0.75;        // max single-action probability
    double pv_rest_floor = 0.25; // probability mass reserved for the other actions
    double mass_threshold = 1e-3;
    double smell_threshold = 1e-3;
};

}  // namespace physarum
