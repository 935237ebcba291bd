#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "physarum/config.hpp"
#include "physarum/errors.hpp"
#include "physarum/format.hpp"
#include "physarum/gates.hpp"
#include "physarum/geometry.hpp"
#include "physarum/harness.hpp"
#include "physarum/metrics.hpp"
#include "physarum/pgm.hpp"
#include "physarum/simulation.hpp"
#include "physarum/wave.hpp"

namespace physarum {

// Everything a subcommand needs; the binary's flag parsing fills this in.
struct RunManifest {
    std::string config_path;          // empty -> built-in defaults
    std::string gate_name;            // exactly one of gate_name/geometry_path
    std::string geometry_path;
    std::pair<bool, bool> inputs{false, false};
    int trial_index = 0;
    std::string out_dir;              // run/table artifact directory
    std::string out_file;             // wave frame path
    std::string wave_origin = "x";    // "x", "y", "both", or "row,col"
    int stride = 10;                  // steps per emitted frame
    bool smell_frames = false;
    int verbosity = 0;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw ParseError("cannot read file '" + path + "'");
    return data;
}

inline void write_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigurationError("cannot write file '" + path.string() + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw ConfigurationError("cannot write file '" + path.string() + "'");
}

inline void ensure_dir(const std::string& dir) {
    if (dir.empty()) throw ConfigurationError("an output directory is required");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigurationError("cannot create output directory '" + dir + "'");
}

inline SimConfig load_config(const RunManifest& m) {
    if (m.config_path.empty()) return SimConfig{};
    return parse_config(read_file(m.config_path));
}

inline GateGeometry load_geometry(const RunManifest& m) {
    if (!m.gate_name.empty() && !m.geometry_path.empty())
        throw ParseError("give either a bundled gate name or a geometry file, not both");
    if (!m.gate_name.empty()) return bundled_gate(m.gate_name);
    if (!m.geometry_path.empty()) return parse_maze(read_file(m.geometry_path), m.geometry_path);
    throw ParseError("a geometry is required: --gate NAME or --geometry FILE");
}

inline std::string frame_name(const char* prefix, int step) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s_%06d.pgm", prefix, step);
    return buf;
}

inline std::string pair_text(std::pair<bool, bool> v) {
    return std::string("<") + (v.first ? '1' : '0') + "," + (v.second ? '1' : '0') + ">";
}

inline std::string optional_step_text(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("none");
}

}  // namespace detail

// Single trial with frames, metrics, and a summary document. Artifacts are
// byte-reproducible for identical manifests.
inline int command_run(const RunManifest& m) {
    const SimConfig config = detail::load_config(m);
    const GateGeometry geometry = detail::load_geometry(m);
    if (m.stride < 1) throw ConfigurationError("frame stride must be >= 1");
    detail::ensure_dir(m.out_dir);
    const std::filesystem::path dir(m.out_dir);

    TrialRunner runner(geometry, config, m.inputs, m.trial_index);

    auto emit_frames = [&](int step) {
        detail::write_file(dir / detail::frame_name("mass", step), render_mass_frame(runner.grid()));
        if (m.smell_frames)
            detail::write_file(dir / detail::frame_name("smell", step),
                               render_smell_frame(runner.grid()));
    };
    emit_frames(0);

    std::string metrics = "step,total_mass,max_mass,p_active,q_active,circularity\n";
    while (!runner.done()) {
        runner.step();
        const Grid& g = runner.grid();
        const double total = g.total_mass();
        double max_mass = 0.0;
        for (const auto& c : g.cells)
            if (c.mass > max_mass) max_mass = c.mass;

        metrics += std::to_string(runner.step_count());
        metrics += ',';
        metrics += format_double(total);
        metrics += ',';
        metrics += format_double(max_mass);
        metrics += ',';
        metrics += runner.p_active() ? '1' : '0';
        metrics += ',';
        metrics += runner.q_active() ? '1' : '0';
        metrics += ',';
        metrics += total > 0.0 ? format_double(circularity(g).ratio) : "nan";
        metrics += '\n';

        if (runner.step_count() % m.stride == 0) emit_frames(runner.step_count());
    }
    if (runner.step_count() % m.stride != 0) emit_frames(runner.step_count());
    detail::write_file(dir / "metrics.csv", metrics);

    std::string summary;
    summary += "gate = " + geometry.name + "\n";
    summary += "input_x = " + format_bool(m.inputs.first) + "\n";
    summary += "input_y = " + format_bool(m.inputs.second) + "\n";
    summary += "output_p = " + format_bool(runner.p_active()) + "\n";
    summary += "output_q = " + format_bool(runner.q_active()) + "\n";
    summary += "first_activation_p = " + detail::optional_step_text(runner.first_activation_p()) + "\n";
    summary += "first_activation_q = " + detail::optional_step_text(runner.first_activation_q()) + "\n";
    summary += "trial_index = " + std::to_string(m.trial_index) + "\n";
    summary += "trial_seed = " + format_u64(runner.seed()) + "\n";
    summary += "executed_steps = " + std::to_string(runner.step_count()) + "\n";
    summary += "# config\n";
    summary += serialize_config(config);
    detail::write_file(dir / "summary.txt", summary);

    std::cout << geometry.name << " " << detail::pair_text(m.inputs) << " -> "
              << detail::pair_text({runner.p_active(), runner.q_active()}) << " after "
              << runner.step_count() << " steps\n";
    return 0;
}

// Full truth table: all four input pairs, config.trials each.
inline int command_table(const RunManifest& m) {
    const SimConfig config = detail::load_config(m);
    const GateGeometry geometry = detail::load_geometry(m);

    const FrequencyTable table = truth_table(config, geometry);

    std::cout << "gate " << geometry.name << ", " << config.trials << " trials per input pair\n";
    for (int idx = 0; idx < 4; ++idx) {
        const auto inputs = FrequencyTable::index_input(idx);
        const auto& row = table.rows[idx];
        const auto modal = row.modal();
        std::cout << detail::pair_text(inputs) << " -> " << detail::pair_text(modal) << "  "
                  << row.modal_count() << "/" << row.trials << "  [";
        bool first = true;
        for (int p = 0; p < 2; ++p) {
            for (int q = 0; q < 2; ++q) {
                if (!first) std::cout << " ";
                first = false;
                std::cout << detail::pair_text({p != 0, q != 0}) << ":" << row.count[p][q];
            }
        }
        std::cout << "]\n";
    }

    if (!m.out_dir.empty()) {
        detail::ensure_dir(m.out_dir);
        nlohmann::ordered_json doc;
        doc["gate"] = geometry.name;
        doc["trials"] = config.trials;
        doc["rows"] = nlohmann::ordered_json::array();
        for (int idx = 0; idx < 4; ++idx) {
            const auto inputs = FrequencyTable::index_input(idx);
            const auto& row = table.rows[idx];
            const auto modal = row.modal();
            nlohmann::ordered_json entry;
            entry["inputs"] = detail::pair_text(inputs);
            entry["modal"] = detail::pair_text(modal);
            entry["modal_count"] = row.modal_count();
            nlohmann::ordered_json counts;
            counts["00"] = row.count[0][0];
            counts["01"] = row.count[0][1];
            counts["10"] = row.count[1][0];
            counts["11"] = row.count[1][1];
            entry["counts"] = counts;
            doc["rows"].push_back(entry);
        }
        detail::write_file(std::filesystem::path(m.out_dir) / "table.json", doc.dump(2) + "\n");
    }
    return 0;
}

// Parse-only check of the given config and/or geometry.
inline int command_validate(const RunManifest& m) {
    bool checked = false;
    if (!m.config_path.empty()) {
        parse_config(detail::read_file(m.config_path));
        std::cout << "config OK: " << m.config_path << "\n";
        checked = true;
    }
    if (!m.gate_name.empty() || !m.geometry_path.empty()) {
        const GateGeometry g = detail::load_geometry(m);
        std::cout << "geometry OK: " << g.name << " " << g.width << "x" << g.height << ", P cells "
                  << g.output_p.size() << ", Q cells " << g.output_q.size() << "\n";
        checked = true;
    }
    if (!checked) throw ParseError("nothing to validate: give --config and/or a geometry");
    return 0;
}

// Wave-field debug frame for a geometry and origin.
inline int command_wave(const RunManifest& m) {
    const GateGeometry geometry = detail::load_geometry(m);
    if (m.out_file.empty()) throw ConfigurationError("wave: an output file is required");

    std::vector<double> field;
    if (m.wave_origin == "x") {
        field = generate_wave_field(geometry, geometry.input_x);
    } else if (m.wave_origin == "y") {
        field = generate_wave_field(geometry, geometry.input_y);
    } else if (m.wave_origin == "both") {
        field = *wave_for_inputs(geometry, {true, true});
    } else {
        const std::size_t comma = m.wave_origin.find(',');
        if (comma == std::string::npos)
            throw ParseError("wave origin must be x, y, both, or row,col");
        Coord origin;
        try {
            origin.row = std::stoi(m.wave_origin.substr(0, comma));
            origin.col = std::stoi(m.wave_origin.substr(comma + 1));
        } catch (const std::exception&) {
            throw ParseError("wave origin must be x, y, both, or row,col");
        }
        field = generate_wave_field(geometry, origin);
    }

    detail::write_file(m.out_file, render_wave_frame(field, geometry.width, geometry.height));
    std::cout << "wave frame written: " << m.out_file << "\n";
    return 0;
}

// Maps thrown errors onto the documented exit statuses: 2 for unreadable or
// invalid inputs, 3 for broken simulation contracts.
template <typename F>
int guarded(F&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigurationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace physarum
