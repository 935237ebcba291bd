#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "physarum/gates.hpp"
#include "physarum/harness.hpp"
#include "physarum/simulation.hpp"

using namespace physarum;

namespace {

// Short corridor: X feeds from the west end, Q is the east end, P sits just
// before it on the path. Activates within tens of steps.
const std::string kCorridor =
    "X....PQ\n"
    "Y######\n";

SimConfig fast_config() {
    SimConfig cfg;
    cfg.initial_mass = 8.0;
    cfg.transfer_fraction = 0.5;
    cfg.reinforcement.mass_threshold = 0.01;
    cfg.max_steps = 400;
    cfg.trials = 8;
    cfg.master_seed = 5;
    return cfg;
}

}  // namespace

TEST_CASE("inactive inputs carry no mass and never activate anything") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    SimConfig cfg = fast_config();
    cfg.max_steps = 60;
    TrialRunner runner(geo, cfg, {false, false}, 0);
    runner.run();
    CHECK(runner.step_count() == 60);
    CHECK_FALSE(runner.p_active());
    CHECK_FALSE(runner.q_active());
    CHECK(runner.grid().total_mass() == 0.0);
}

TEST_CASE("a single input colonizes the corridor and latches the outputs") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    const SimConfig cfg = fast_config();
    TrialRunner runner(geo, cfg, {true, false}, 0);
    runner.run();
    CHECK(runner.q_active());
    REQUIRE(runner.first_activation_q().has_value());
    CHECK(*runner.first_activation_q() <= runner.step_count());
    CHECK(runner.grid().total_mass() == Catch::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("activation latches at the first crossing and stays") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    const SimConfig cfg = fast_config();
    TrialRunner runner(geo, cfg, {true, false}, 1);
    int first_seen = -1;
    while (!runner.done()) {
        runner.step();
        if (first_seen < 0 && runner.q_active()) first_seen = runner.step_count();
        if (first_seen >= 0) CHECK(runner.q_active());
    }
    REQUIRE(first_seen > 0);
    CHECK(runner.first_activation_q() == first_seen);
}

TEST_CASE("identical trial indices replay identical trajectories") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    const SimConfig cfg = fast_config();
    TrialRunner a(geo, cfg, {true, false}, 3);
    TrialRunner b(geo, cfg, {true, false}, 3);
    a.run();
    b.run();
    CHECK(a.seed() == b.seed());
    CHECK(a.step_count() == b.step_count());
    CHECK(a.first_activation_q() == b.first_activation_q());
    for (std::size_t i = 0; i < a.grid().cells.size(); ++i)
        REQUIRE(a.grid().cells[i].mass == b.grid().cells[i].mass);
}

TEST_CASE("trial indices derive distinct seeds and distinct runs") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    const SimConfig cfg = fast_config();
    TrialRunner a(geo, cfg, {true, false}, 0);
    TrialRunner b(geo, cfg, {true, false}, 1);
    CHECK(a.seed() != b.seed());
    a.run();
    b.run();
    bool differs = a.first_activation_q() != b.first_activation_q();
    for (std::size_t i = 0; i < a.grid().cells.size() && !differs; ++i)
        differs = a.grid().cells[i].mass != b.grid().cells[i].mass;
    CHECK(differs);
}

TEST_CASE("mass is conserved through full simulation steps") {
    const GateGeometry geo = bundled_gate("P2");
    SimConfig cfg = fast_config();
    cfg.max_steps = 200;
    cfg.wave_enabled = true;
    cfg.food_placement = {{{12, 57}, 20.0}};
    TrialRunner runner(geo, cfg, {true, true}, 0);
    runner.run();
    CHECK(runner.grid().total_mass() == Catch::Approx(16.0).epsilon(1e-9));
}

TEST_CASE("the wave field exists exactly when enabled and an input is active") {
    const GateGeometry geo = bundled_gate("P1");
    SimConfig cfg = fast_config();
    cfg.max_steps = 1;

    TrialRunner off(geo, cfg, {true, true}, 0);
    CHECK_FALSE(off.grid().wave.has_value());

    cfg.wave_enabled = true;
    TrialRunner on(geo, cfg, {true, false}, 0);
    REQUIRE(on.grid().wave.has_value());

    TrialRunner idle(geo, cfg, {false, false}, 0);
    CHECK_FALSE(idle.grid().wave.has_value());
}

TEST_CASE("an all-sentinel wave field behaves like no wave field") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    const SimConfig cfg = fast_config();

    TrialRunner plain(geo, cfg, {true, false}, 2);
    TrialRunner masked(geo, cfg, {true, false}, 2);
    const_cast<Grid&>(masked.grid()).wave =
        std::vector<double>(geo.mask.size(), kWaveSentinel);

    plain.run();
    masked.run();
    for (std::size_t i = 0; i < plain.grid().cells.size(); ++i) {
        REQUIRE(plain.grid().cells[i].mass == masked.grid().cells[i].mass);
        REQUIRE(plain.grid().cells[i].pv == masked.grid().cells[i].pv);
    }
}

TEST_CASE("init_grid rejects food on walls and inaccessible inputs") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    SimConfig cfg = fast_config();
    cfg.food_placement = {{{1, 3}, 5.0}};  // wall row
    CHECK_THROWS_AS(init_grid(geo, cfg, {true, false}), ConfigurationError);

    cfg.food_placement = {{{0, 99}, 5.0}};
    CHECK_THROWS_AS(init_grid(geo, cfg, {true, false}), ConfigurationError);

    cfg.food_placement.clear();
    CHECK_NOTHROW(init_grid(geo, cfg, {true, true}));
}

TEST_CASE("run_experiment counts decompose into individual trials") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    const SimConfig cfg = fast_config();
    const OutputCounts counts = run_experiment(cfg, geo, {true, false});
    CHECK(counts.trials == cfg.trials);

    OutputCounts manual;
    for (int t = 0; t < cfg.trials; ++t) {
        const TrialResult r = run_trial(cfg, geo, {true, false}, t);
        manual.add(r.p, r.q);
    }
    CHECK(manual.count == counts.count);
    CHECK(manual.trials == counts.trials);
}

TEST_CASE("modal outcome breaks ties in canonical order") {
    OutputCounts c;
    c.add(false, true);
    c.add(true, false);
    CHECK(c.modal() == std::pair<bool, bool>(false, true));
    c.add(true, false);
    CHECK(c.modal() == std::pair<bool, bool>(true, false));
    CHECK(c.modal_count() == 2);
}

TEST_CASE("input indexing round-trips") {
    for (int i = 0; i < 4; ++i)
        CHECK(FrequencyTable::input_index(FrequencyTable::index_input(i)) == i);
    CHECK(FrequencyTable::input_index({false, false}) == 0);
    CHECK(FrequencyTable::input_index({false, true}) == 1);
    CHECK(FrequencyTable::input_index({true, false}) == 2);
    CHECK(FrequencyTable::input_index({true, true}) == 3);
}

TEST_CASE("truth_table fills all four rows") {
    const GateGeometry geo = parse_maze(kCorridor, "corridor");
    SimConfig cfg = fast_config();
    cfg.trials = 3;
    cfg.max_steps = 150;
    const FrequencyTable table = truth_table(cfg, geo);
    for (int i = 0; i < 4; ++i) CHECK(table.rows[i].trials == 3);
    CHECK(table.rows[0].count[0][0] == 3);  // <0,0> row never activates
}
