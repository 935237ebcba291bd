#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <system_error>

namespace physarum {

// Shortest round-trip decimal form of a double ("0.1", "1e-05", "inf", "nan").
// Used everywhere a float reaches an output byte stream so that emitted
// artifacts are reproducible across runs.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;  // 64 bytes always suffice for shortest form
    return std::string(buf, ptr);
}

inline std::string format_u64(std::uint64_t v) {
    char buf[24];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

inline std::string format_bool(bool v) { return v ? "true" : "false"; }

}  // namespace physarum
