#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ionbounds/pulse.hpp"

namespace ionbounds {

/// A malformed or inconsistent configuration. The message names the file,
/// field, or parse position at fault.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds a pulse from a JSON object with the fixed keys
///   shape        "cosine" | "cosine_ramped" | "constant" | "delta_kick" |
///                "tabulated"
///   E0           peak field (a.u.); cosine/ramped/constant shapes
///   omega        carrier frequency (a.u.); cosine/ramped shapes
///   tau          duration (a.u.); all shapes except delta_kick
///   ramp_cycles  turn-on length in optical cycles; ramped shape
///   F0           kick strength (a.u.); delta_kick shape
///   samples      [[t, E], ...]; tabulated shape
Pulse parse_pulse_config(const nlohmann::json& config);

/// Reads and parses a pulse configuration file.
Pulse load_pulse_config(const std::string& path);

/// A numeric range: either an explicit JSON array of values or an object
/// {"start": a, "stop": b, "count": n} describing a uniform grid.
std::vector<double> parse_range(const nlohmann::json& range, const std::string& name);

}  // namespace ionbounds
