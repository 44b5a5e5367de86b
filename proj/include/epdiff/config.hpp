#pragma once

#include <stdexcept>
#include <string>

#include "epdiff/integrate.hpp"

namespace epdiff {

struct ConfigError : std::runtime_error {
    std::string key;
    int line; ///< 1-based line number, 0 when not tied to a line
    ConfigError(const std::string& msg, std::string k, int l)
        : std::runtime_error(msg), key(std::move(k)), line(l) {}
};

/// Parses a flat key=value document ('#' starts a comment) into a validated
/// RunConfig. Unknown keys are rejected; required keys depend on the model
/// and dimension; g, dealias and seed default to 9.81, true and 0.
RunConfig parse_config(const std::string& text);

/// Inverse of parse_config: a key=value document that parses back to an
/// equal config.
std::string serialize_config(const RunConfig& c);

bool operator==(const RunConfig& a, const RunConfig& b);

std::string to_string(Model m);
std::string to_string(InitialCondition ic);

} // namespace epdiff
