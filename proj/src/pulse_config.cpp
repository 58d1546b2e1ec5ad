#include "ionbounds/pulse_config.hpp"

#include <fstream>

namespace ionbounds {

namespace {

using nlohmann::json;

double require_number(const json& config, const std::string& key) {
  if (!config.contains(key))
    throw ConfigError("pulse config: missing field '" + key + "'");
  const auto& value = config.at(key);
  if (!value.is_number())
    throw ConfigError("pulse config: field '" + key + "' must be a number");
  return value.get<double>();
}

}  // namespace

Pulse parse_pulse_config(const json& config) {
  if (!config.is_object()) throw ConfigError("pulse config: expected a JSON object");
  if (!config.contains("shape"))
    throw ConfigError("pulse config: missing field 'shape'");
  const std::string shape = config.at("shape").get<std::string>();
  try {
    if (shape == "cosine")
      return Pulse::cosine(require_number(config, "E0"), require_number(config, "omega"),
                           require_number(config, "tau"));
    if (shape == "cosine_ramped")
      return Pulse::cosine_ramped(require_number(config, "E0"),
                                  require_number(config, "omega"),
                                  require_number(config, "tau"),
                                  require_number(config, "ramp_cycles"));
    if (shape == "constant")
      return Pulse::constant(require_number(config, "E0"), require_number(config, "tau"));
    if (shape == "delta_kick") return Pulse::delta_kick(require_number(config, "F0"));
    if (shape == "tabulated") {
      if (!config.contains("samples"))
        throw ConfigError("pulse config: missing field 'samples'");
      const auto& samples_json = config.at("samples");
      if (!samples_json.is_array())
        throw ConfigError("pulse config: field 'samples' must be an array of [t, E] pairs");
      std::vector<std::pair<double, double>> samples;
      for (const auto& entry : samples_json) {
        if (!entry.is_array() || entry.size() != 2)
          throw ConfigError("pulse config: each sample must be a [t, E] pair");
        samples.emplace_back(entry[0].get<double>(), entry[1].get<double>());
      }
      return Pulse::tabulated(std::move(samples), require_number(config, "tau"));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("pulse config: ") + e.what());
  }
  throw ConfigError("pulse config: unknown shape '" + shape + "'");
}

Pulse load_pulse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pulse config file: " + path);
  json config;
  try {
    config = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("pulse config " + path + ": " + e.what());
  }
  return parse_pulse_config(config);
}

std::vector<double> parse_range(const nlohmann::json& range, const std::string& name) {
  std::vector<double> values;
  if (range.is_array()) {
    for (const auto& v : range) {
      if (!v.is_number())
        throw ConfigError("range '" + name + "': entries must be numbers");
      values.push_back(v.get<double>());
    }
    return values;
  }
  if (range.is_object()) {
    for (const char* key : {"start", "stop", "count"})
      if (!range.contains(key))
        throw ConfigError("range '" + name + "': missing field '" + std::string(key) + "'");
    const double start = range.at("start").get<double>();
    const double stop = range.at("stop").get<double>();
    const long count = range.at("count").get<long>();
    if (count < 1) throw ConfigError("range '" + name + "': count must be >= 1");
    if (count == 1) return {start};
    for (long i = 0; i < count; ++i)
      values.push_back(start + (stop - start) * static_cast<double>(i) /
                                   static_cast<double>(count - 1));
    return values;
  }
  throw ConfigError("range '" + name + "': expected an array or {start, stop, count}");
}

}  // namespace ionbounds
