#pragma once

#include <stdexcept>
#include <string>

namespace physarum {

// Malformed input document (maze or config text). Messages carry the
// offending line (and column where it applies) so the CLI can surface them.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid inputs that do not fit together (input site on a wall,
// food source out of bounds, origin inaccessible, ...).
struct ConfigurationError : std::runtime_error {
    explicit ConfigurationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant during simulation; maps to exit status 3.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace physarum
