// Command-line surface: pulse configs in, bound reports and figure CSVs out.
//
// Subcommands
//   report     evaluate all bounds for one pulse/state
//   figure1    clipped upper/lower bound curves over one cycle, E0 = 5/10/20
//   figure2    upper bound over four cycles of 10 cos(50 t)
//   sweep      Cartesian sweep over cosine-pulse parameters
//   constants  the fixed numerical constants and coefficient tables
//
// Exit codes: 0 success, 1 configuration error, 2 numeric failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ionbounds/bounds.hpp"
#include "ionbounds/csv.hpp"
#include "ionbounds/figures.hpp"
#include "ionbounds/pulse_config.hpp"
#include "ionbounds/quadrature.hpp"

namespace {

using namespace ionbounds;

std::filesystem::path resolve_output(const std::string& out_flag,
                                     const std::string& default_name) {
  if (!out_flag.empty()) return out_flag;
  const char* dir = std::getenv("IONBOUNDS_OUT_DIR");
  std::filesystem::path base = dir ? dir : ".";
  return base / default_name;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path.string());
  return out;
}

HydrogenState parse_state(const std::string& spec) {
  int n = 0, l = 0, m = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> n >> c1 >> l >> c2 >> m) || c1 != ',' || c2 != ',')
    throw ConfigError("state must be given as n,l,m");
  return HydrogenState(n, l, m);
}

ShiftMode parse_shift_mode(const std::string& mode) {
  if (mode == "estimate") return ShiftMode::estimate;
  if (mode == "quadrature") return ShiftMode::quadrature;
  if (mode == "exact") return ShiftMode::exact;
  throw ConfigError("shift mode must be estimate, quadrature, or exact");
}

struct CommonFlags {
  std::string pulse_path;
  std::string state_spec = "1,0,0";
  std::string shift_mode = "estimate";
  std::string out_path;
  bool drop_spreading = false;
};

int run_report(const CommonFlags& flags) {
  const Pulse pulse = load_pulse_config(flags.pulse_path);
  const HydrogenState state = parse_state(flags.state_spec);
  BoundOptions options;
  options.drop_spreading = flags.drop_spreading;
  options.shift_mode = parse_shift_mode(flags.shift_mode);
  const StateData data = hydrogen_state_data(state);
  const auto reports = evaluate_all_bounds(pulse, data, options);
  write_report_text(std::cout, reports);
  if (!flags.out_path.empty()) {
    auto out = open_output(flags.out_path);
    write_report_csv(out, reports);
  }
  return 0;
}

int run_sweep(const std::string& config_path, const CommonFlags& flags) {
  std::ifstream in(config_path);
  if (!in) throw ConfigError("cannot open sweep config file: " + config_path);
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("sweep config " + config_path + ": " + e.what());
  }
  SweepRequest request{.e0 = {}, .omega = {}, .tau = {},
                       .state = parse_state(flags.state_spec), .options = {}};
  for (const char* key : {"E0", "omega", "tau"})
    if (!config.contains(key))
      throw ConfigError("sweep config: missing range '" + std::string(key) + "'");
  request.e0 = parse_range(config.at("E0"), "E0");
  request.omega = parse_range(config.at("omega"), "omega");
  request.tau = parse_range(config.at("tau"), "tau");
  request.options.drop_spreading = flags.drop_spreading;
  request.options.shift_mode = parse_shift_mode(flags.shift_mode);
  const auto rows = sweep_data(request);
  auto out = open_output(resolve_output(flags.out_path, "sweep.csv"));
  write_sweep_csv(out, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigorous bounds on the ionization probability of hydrogen-like "
               "bound states under short intense pulses (atomic units)"};
  app.require_subcommand(1);

  CommonFlags flags;
  int points = 400;
  bool figure2_drop = false;
  std::string sweep_config;

  auto add_state_flags = [&](CLI::App* cmd) {
    cmd->add_option("--state", flags.state_spec, "Bound state as n,l,m")
        ->capture_default_str();
    cmd->add_flag("--drop-spreading", flags.drop_spreading,
                  "Drop the field-independent shift-integral term");
    cmd->add_option("--shift-mode", flags.shift_mode,
                    "Shift-norm evaluation: estimate|quadrature|exact")
        ->capture_default_str();
  };

  auto* report = app.add_subcommand("report", "Evaluate all bounds for one pulse");
  report->add_option("--pulse", flags.pulse_path, "Pulse config (JSON)")->required();
  add_state_flags(report);
  report->add_option("--out", flags.out_path, "Also write the table as CSV");

  auto* figure1 = app.add_subcommand("figure1", "Bound curves over one cycle");
  figure1->add_option("--out", flags.out_path, "Output CSV path");
  figure1->add_option("--points", points, "Number of tau samples")->check(CLI::Range(2, 1000000));

  auto* figure2 = app.add_subcommand("figure2", "Upper bound over four fast cycles");
  figure2->add_option("--out", flags.out_path, "Output CSV path");
  figure2->add_option("--points", points, "Number of tau samples")->check(CLI::Range(2, 1000000));
  figure2->add_flag("--drop-spreading", figure2_drop,
                    "Drop the field-independent shift-integral term");

  auto* sweep = app.add_subcommand("sweep", "Cartesian sweep over cosine pulses");
  sweep->add_option("--config", sweep_config, "Sweep ranges (JSON)")->required();
  add_state_flags(sweep);
  sweep->add_option("--out", flags.out_path, "Output CSV path");

  auto* constants = app.add_subcommand("constants", "Fixed constants and tables");
  constants->add_option("--out", flags.out_path, "Output text path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (report->parsed()) return run_report(flags);
    if (figure1->parsed()) {
      auto out = open_output(resolve_output(flags.out_path, "figure1.csv"));
      write_figure1_csv(out, figure1_data(points));
      return 0;
    }
    if (figure2->parsed()) {
      auto out = open_output(resolve_output(flags.out_path, "figure2.csv"));
      write_figure2_csv(out, figure2_data(points, !figure2_drop));
      return 0;
    }
    if (sweep->parsed()) return run_sweep(sweep_config, flags);
    if (constants->parsed()) {
      if (flags.out_path.empty()) {
        write_constants_report(std::cout);
      } else {
        auto out = open_output(resolve_output(flags.out_path, "constants.txt"));
        write_constants_report(out);
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const QuadratureError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
