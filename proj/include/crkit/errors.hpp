#pragma once

#include <stdexcept>
#include <string>

namespace crkit {

/// Bad caller input: dimension mismatches, malformed specs, out-of-range
/// parameters. The CLI maps these to exit code 1.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Violation of a mathematical identity the library guarantees (an internal
/// theorem failed on concrete data). Never caused by bad input; the CLI maps
/// these to exit code 2.
class internal_inconsistency : public std::logic_error {
public:
    explicit internal_inconsistency(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace crkit
