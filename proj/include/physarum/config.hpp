#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "physarum/errors.hpp"
#include "physarum/format.hpp"
#include "physarum/geometry.hpp"
#include "physarum/params.hpp"

namespace physarum {

struct FoodSource {
    Coord at;
    double strength = 1.0;

    bool operator==(const FoodSource&) const = default;
};

// Complete scalar parameter set for one experiment. Defaults are the shipped
// baseline; tuned per-gate values live in data/configs/*.cfg.
struct SimConfig {
    int width = 60;
    int height = 60;
    double initial_mass = 1.0;
    double source_strength = 1.0;
    double transfer_fraction = 0.1;
    ReinforcementParams reinforcement;
    int max_steps = 1000;
    int trials = 30;
    std::uint64_t master_seed = 1;
    bool wave_enabled = false;
    std::vector<FoodSource> food_placement;
};

namespace detail {

inline ParseError config_error(int line, const std::string& msg) {
    return ParseError("config line " + std::to_string(line) + ": " + msg);
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline double parse_double_field(std::string_view v, int line, std::string_view key) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw config_error(line, std::string(key) + ": malformed number '" + std::string(v) + "'");
    return out;
}

inline std::int64_t parse_int_field(std::string_view v, int line, std::string_view key) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw config_error(line, std::string(key) + ": malformed integer '" + std::string(v) + "'");
    return out;
}

inline std::uint64_t parse_u64_field(std::string_view v, int line, std::string_view key) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw config_error(line,
                           std::string(key) + ": malformed unsigned integer '" + std::string(v) + "'");
    return out;
}

inline bool parse_bool_field(std::string_view v, int line, std::string_view key) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw config_error(line, std::string(key) + ": expected true or false, got '" + std::string(v) + "'");
}

// "r,c,strength; r,c; ..." — empty value means no sources. Entries without a
// strength get the document's final source_strength after parsing (marked
// with a negative sentinel until then).
inline std::vector<FoodSource> parse_food_field(std::string_view v, int line) {
    std::vector<FoodSource> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        std::size_t semi = v.find(';', pos);
        if (semi == std::string_view::npos) semi = v.size();
        std::string_view entry = trim(v.substr(pos, semi - pos));
        if (!entry.empty()) {
            std::size_t c1 = entry.find(',');
            if (c1 == std::string_view::npos)
                throw config_error(line, "food_placement: expected 'row,col[,strength]', got '" +
                                             std::string(entry) + "'");
            std::size_t c2 = entry.find(',', c1 + 1);
            FoodSource fs;
            fs.at.row = static_cast<int>(
                parse_int_field(trim(entry.substr(0, c1)), line, "food_placement row"));
            if (c2 == std::string_view::npos) {
                fs.at.col = static_cast<int>(
                    parse_int_field(trim(entry.substr(c1 + 1)), line, "food_placement col"));
                fs.strength = -1.0;  // filled from source_strength post-parse
            } else {
                fs.at.col = static_cast<int>(
                    parse_int_field(trim(entry.substr(c1 + 1, c2 - c1 - 1)), line, "food_placement col"));
                fs.strength =
                    parse_double_field(trim(entry.substr(c2 + 1)), line, "food_placement strength");
                if (fs.strength < 0)
                    throw config_error(line, "food_placement: strength must be >= 0");
            }
            out.push_back(fs);
        }
        if (semi == v.size()) break;
        pos = semi + 1;
    }
    return out;
}

inline void check_range(bool ok, int line, const std::string& msg) {
    if (!ok) throw config_error(line, msg);
}

}  // namespace detail

// Parses a flat "key = value" document. '#' starts a comment; blank lines are
// skipped; unknown keys and out-of-range values are rejected with their line
// number; missing keys keep the defaults above. penalty_wave, when absent,
// mirrors reward_wave.
inline SimConfig parse_config(std::string_view text) {
    SimConfig cfg;
    bool saw_penalty_wave = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (!line.empty()) {
            std::size_t eq = line.find('=');
            if (eq == std::string_view::npos)
                throw detail::config_error(line_no, "expected 'key = value', got '" +
                                                        std::string(line) + "'");
            std::string_view key = detail::trim(line.substr(0, eq));
            std::string_view val = detail::trim(line.substr(eq + 1));
            if (key.empty()) throw detail::config_error(line_no, "missing key before '='");

            using detail::check_range;
            auto& rp = cfg.reinforcement;
            if (key == "width") {
                cfg.width = static_cast<int>(detail::parse_int_field(val, line_no, key));
                check_range(cfg.width >= 1, line_no, "width: must be >= 1");
            } else if (key == "height") {
                cfg.height = static_cast<int>(detail::parse_int_field(val, line_no, key));
                check_range(cfg.height >= 1, line_no, "height: must be >= 1");
            } else if (key == "initial_mass") {
                cfg.initial_mass = detail::parse_double_field(val, line_no, key);
                check_range(cfg.initial_mass >= 0, line_no, "initial_mass: must be >= 0");
            } else if (key == "source_strength") {
                cfg.source_strength = detail::parse_double_field(val, line_no, key);
                check_range(cfg.source_strength >= 0, line_no, "source_strength: must be >= 0");
            } else if (key == "transfer_fraction") {
                cfg.transfer_fraction = detail::parse_double_field(val, line_no, key);
                check_range(cfg.transfer_fraction > 0 && cfg.transfer_fraction <= 1, line_no,
                            "transfer_fraction: must be in (0,1]");
            } else if (key == "reward_smell") {
                rp.reward_smell = detail::parse_double_field(val, line_no, key);
                check_range(rp.reward_smell > 0 && rp.reward_smell < 1, line_no,
                            "reward_smell: must be in (0,1)");
            } else if (key == "penalty_smell") {
                rp.penalty_smell = detail::parse_double_field(val, line_no, key);
                check_range(rp.penalty_smell > 0 && rp.penalty_smell < 1, line_no,
                            "penalty_smell: must be in (0,1)");
            } else if (key == "reward_wave") {
                rp.reward_wave = detail::parse_double_field(val, line_no, key);
                check_range(rp.reward_wave > 0 && rp.reward_wave < 1, line_no,
                            "reward_wave: must be in (0,1)");
            } else if (key == "penalty_wave") {
                rp.penalty_wave = detail::parse_double_field(val, line_no, key);
                check_range(rp.penalty_wave > 0 && rp.penalty_wave < 1, line_no,
                            "penalty_wave: must be in (0,1)");
                saw_penalty_wave = true;
            } else if (key == "pv_cap") {
                rp.pv_cap = detail::parse_double_field(val, line_no, key);
                check_range(rp.pv_cap >= 0.5 && rp.pv_cap < 1, line_no,
                            "pv_cap: must be in [0.5,1)");
            } else if (key == "mass_threshold") {
                rp.mass_threshold = detail::parse_double_field(val, line_no, key);
                check_range(rp.mass_threshold > 0, line_no, "mass_threshold: must be > 0");
            } else if (key == "smell_threshold") {
                rp.smell_threshold = detail::parse_double_field(val, line_no, key);
                check_range(rp.smell_threshold > 0, line_no, "smell_threshold: must be > 0");
            } else if (key == "max_steps") {
                cfg.max_steps = static_cast<int>(detail::parse_int_field(val, line_no, key));
                check_range(cfg.max_steps >= 1, line_no, "max_steps: must be >= 1");
            } else if (key == "trials") {
                cfg.trials = static_cast<int>(detail::parse_int_field(val, line_no, key));
                check_range(cfg.trials >= 1, line_no, "trials: must be >= 1");
            } else if (key == "master_seed") {
                cfg.master_seed = detail::parse_u64_field(val, line_no, key);
            } else if (key == "wave_enabled") {
                cfg.wave_enabled = detail::parse_bool_field(val, line_no, key);
            } else if (key == "food_placement") {
                cfg.food_placement = detail::parse_food_field(val, line_no);
            } else {
                throw detail::config_error(line_no, "unknown key '" + std::string(key) + "'");
            }
        }
        if (nl == text.size()) break;
        pos = nl + 1;
    }

    if (!saw_penalty_wave) cfg.reinforcement.penalty_wave = cfg.reinforcement.reward_wave;
    cfg.reinforcement.pv_rest_floor = 1.0 - cfg.reinforcement.pv_cap;
    for (auto& fs : cfg.food_placement)
        if (fs.strength < 0) fs.strength = cfg.source_strength;
    return cfg;
}

// Canonical form: every key once, fixed order, shortest float spelling.
// serialize(parse(serialize(c))) is byte-identical to serialize(c).
inline std::string serialize_config(const SimConfig& cfg) {
    const auto& rp = cfg.reinforcement;
    std::string out;
    auto kv = [&out](std::string_view key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    kv("width", std::to_string(cfg.width));
    kv("height", std::to_string(cfg.height));
    kv("initial_mass", format_double(cfg.initial_mass));
    kv("source_strength", format_double(cfg.source_strength));
    kv("transfer_fraction", format_double(cfg.transfer_fraction));
    kv("reward_smell", format_double(rp.reward_smell));
    kv("penalty_smell", format_double(rp.penalty_smell));
    kv("reward_wave", format_double(rp.reward_wave));
    kv("penalty_wave", format_double(rp.penalty_wave));
    kv("pv_cap", format_double(rp.pv_cap));
    kv("mass_threshold", format_double(rp.mass_threshold));
    kv("smell_threshold", format_double(rp.smell_threshold));
    kv("max_steps", std::to_string(cfg.max_steps));
    kv("trials", std::to_string(cfg.trials));
    kv("master_seed", format_u64(cfg.master_seed));
    kv("wave_enabled", format_bool(cfg.wave_enabled));
    std::string food;
    for (std::size_t i = 0; i < cfg.food_placement.size(); ++i) {
        if (i) food += ';';
        const auto& fs = cfg.food_placement[i];
        food += std::to_string(fs.at.row) + ',' + std::to_string(fs.at.col) + ',' +
                format_double(fs.strength);
    }
    kv("food_placement", food);
    return out;
}

}  // namespace physarum
