#include <string>
#include <utility>

#include <CLI11.hpp>

#include "physarum/cli.hpp"
#include "physarum/errors.hpp"

namespace {

std::pair<bool, bool> parse_inputs(const std::string& text) {
    if (text.size() == 2 && (text[0] == '0' || text[0] == '1') &&
        (text[1] == '0' || text[1] == '1'))
        return {text[0] == '1', text[1] == '1'};
    throw physarum::ParseError("inputs must be two digits drawn from {0,1}, e.g. 10");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learning cellular automaton gate simulator"};
    app.require_subcommand(1);

    physarum::RunManifest m;
    std::string inputs_text = "00";

    auto add_source_flags = [&](CLI::App* cmd, bool config_only = false) {
        cmd->add_option("--config", m.config_path, "key=value parameter file");
        if (!config_only) {
            cmd->add_option("--gate", m.gate_name, "bundled gate name (P1 or P2)");
            cmd->add_option("--geometry", m.geometry_path, "maze layout file");
        }
    };

    CLI::App* run = app.add_subcommand(
        "run", "Run a single trial; write frames, metrics.csv, and summary.txt");
    add_source_flags(run);
    run->add_option("--inputs", inputs_text, "input pair as two digits (x then y)");
    run->add_option("--trial", m.trial_index, "trial index for seed derivation")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--out", m.out_dir, "output directory")->required();
    run->add_option("--stride", m.stride, "steps between frames");
    run->add_flag("--smell-frames", m.smell_frames, "also write smell-field frames");

    CLI::App* table = app.add_subcommand(
        "table", "Run every input pair for the configured trial count and print frequencies");
    add_source_flags(table);
    table->add_option("--out", m.out_dir, "directory for table.json (optional)");

    CLI::App* validate = app.add_subcommand(
        "validate", "Parse a config and/or geometry and report problems without simulating");
    add_source_flags(validate);

    CLI::App* wave = app.add_subcommand(
        "wave", "Render the distance field from an origin as a greyscale frame");
    add_source_flags(wave);
    wave->add_option("--origin", m.wave_origin, "x, y, both, or row,col");
    wave->add_option("--out", m.out_file, "output image path")->required();

    app.add_flag("-v,--verbose", m.verbosity, "increase verbosity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    return physarum::guarded([&]() -> int {
        if (run->parsed()) {
            m.inputs = parse_inputs(inputs_text);
            return physarum::command_run(m);
        }
        if (table->parsed()) return physarum::command_table(m);
        if (validate->parsed()) return physarum::command_validate(m);
        return physarum::command_wave(m);
    });
}
