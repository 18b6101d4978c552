// Experiment driver for the chaotic-waveform power-transfer simulator.
// Subcommands write one CSV per run (stdout or --out) and a short summary to
// stderr. Exit codes: 0 ok, 1 tolerance breach under --strict, 2 bad config.

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaoswpt/experiments.hpp"

namespace {

using chaoswpt::cli::ConfigError;
using chaoswpt::cli::KeyValues;
using chaoswpt::cli::Options;
using chaoswpt::cli::RunResult;

struct CommonFlags {
  std::string config_path;
  KeyValues overrides;  // flag order; applied after the config file
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path,
                  "key=value file applied before flags");
  const auto add = [cmd, &flags](const std::string& flag, std::string key,
                                 const std::string& help) {
    cmd->add_option_function<std::string>(
        flag,
        [&flags, key = std::move(key)](const std::string& value) {
          flags.overrides.emplace_back(key, value);
        },
        help);
  };
  add("--scheme", "scheme", "dcsk|unmodulated|srdcsk|optimal_sr");
  add("--beta", "beta", "spreading factor (chips per bit)");
  add("--beta-r", "beta_r", "reference length; must divide beta");
  add("--psi", "psi", "correlator window: frame|none");
  add("--m", "m", "Nakagami shape, >= 1 or inf");
  add("--pt-dbm", "pt_dbm", "transmit power in dBm");
  add("--distance", "distance_m", "link distance in meters");
  add("--alpha", "alpha", "path-loss exponent");
  add("--k2", "k2", "rectenna second-order coefficient");
  add("--k4", "k4", "rectenna fourth-order coefficient");
  add("--r-ant", "r_ant", "antenna resistance in ohms");
  add("--degree", "degree", "Chebyshev map degree, >= 2");
  add("--trajectory", "trajectory", "chip source: per_symbol|iid");
  add("--hpa", "hpa", "amplifier model: ideal|rapp");
  add("--hpa-smoothness", "hpa_smoothness", "Rapp smoothness p");
  add("--hpa-sat-dbm", "hpa_sat_dbm", "Rapp saturation level in dBm");
  add("--n-symbols", "n_symbols", "Monte Carlo symbols per point");
  add("--seed", "seed", "base RNG seed");
  add("--confidence", "confidence", "CI level in (0,1)");
  add("--threads", "threads", "worker threads; <= 0 = all cores");
  add("--n-tones", "n_tones", "multisine tone count");
  add("--strict", "strict", "tolerance breaches fail the run: true|false");
  add("--out", "out", "CSV output path (default stdout)");
}

Options make_options(const CommonFlags& flags) {
  Options opts;
  if (!flags.config_path.empty()) {
    chaoswpt::cli::apply_overrides(
        opts, chaoswpt::cli::parse_config_file(flags.config_path));
  }
  chaoswpt::cli::apply_overrides(opts, flags.overrides);
  return opts;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto begin = item.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = item.find_last_not_of(" \t");
    const std::string token = item.substr(begin, end - begin + 1);
    if (token == "inf") {
      grid.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    try {
      std::size_t pos = 0;
      grid.push_back(std::stod(token, &pos));
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ConfigError("grid: expected a number, got '" + token + "'");
    }
  }
  if (grid.empty()) throw ConfigError("grid: no values");
  return grid;
}

std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> grid;
  for (double v : parse_grid(text)) {
    if (!(v >= 1.0) || v != static_cast<int>(v)) {
      throw ConfigError("grid: expected positive integers");
    }
    grid.push_back(static_cast<int>(v));
  }
  return grid;
}

// CSV goes to --out (then the summary owns stdout) or to stdout (summary
// moves to stderr so the CSV stays machine-readable).
int emit(const RunResult& result, const Options& opts) {
  bool csv_on_stdout = opts.out_path.empty();
  if (!result.csv.empty()) {
    if (csv_on_stdout) {
      std::cout << result.csv;
    } else {
      std::ofstream out(opts.out_path);
      if (!out) {
        std::cerr << "config error: cannot write '" << opts.out_path << "'\n";
        return chaoswpt::cli::kConfigError;
      }
      out << result.csv;
    }
  }
  (csv_on_stdout && !result.csv.empty() ? std::cerr : std::cout)
      << result.summary;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chaotic-waveform wireless power transfer experiments"};
  app.require_subcommand(1);

  std::string experiment_list;
  for (const auto& name : chaoswpt::cli::experiment_names()) {
    experiment_list += experiment_list.empty() ? name : ", " + name;
  }

  CommonFlags run_flags;
  std::string experiment;
  auto* run_cmd = app.add_subcommand("run", "Run a canonical experiment");
  run_cmd->add_option("experiment", experiment, "one of: " + experiment_list)
      ->required();
  add_common(run_cmd, run_flags);

  CommonFlags sweep_flags;
  std::string sweep_param;
  std::string sweep_grid;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Sweep one parameter over a grid");
  sweep_cmd->add_option("param", sweep_param, "beta|beta_r|m|pt_dbm|n_tones")
      ->required();
  sweep_cmd->add_option("--grid", sweep_grid, "comma-separated values")
      ->required();
  add_common(sweep_cmd, sweep_flags);

  CommonFlags papr_flags;
  auto* papr_cmd = app.add_subcommand(
      "papr", "Peak-to-average report for the configured waveform");
  add_common(papr_cmd, papr_flags);

  CommonFlags cmp_flags;
  std::string cmp_tones = "2,4,8,16";
  std::string cmp_drive = "10,13,16,19,22,25,28,31,34";
  auto* cmp_cmd = app.add_subcommand(
      "compare-multisine", "Chaotic waveform vs multisine baselines");
  cmp_cmd->add_option("--tones", cmp_tones, "tone counts (default 2,4,8,16)");
  cmp_cmd->add_option("--drive-dbm", cmp_drive,
                      "transmit powers in dBm (default 10..34 step 3)");
  add_common(cmp_cmd, cmp_flags);

  CommonFlags self_flags;
  auto* self_cmd =
      app.add_subcommand("selftest", "Fast deterministic sanity checks");
  add_common(self_cmd, self_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return chaoswpt::cli::kConfigError;
  }

  try {
    if (run_cmd->parsed()) {
      chaoswpt::cli::ExperimentSpec spec{experiment, make_options(run_flags)};
      return emit(chaoswpt::cli::run_experiment(spec), spec.options);
    }
    if (sweep_cmd->parsed()) {
      const Options opts = make_options(sweep_flags);
      return emit(chaoswpt::cli::run_sweep(sweep_param, parse_grid(sweep_grid), opts),
                  opts);
    }
    if (papr_cmd->parsed()) {
      const Options opts = make_options(papr_flags);
      return emit(chaoswpt::cli::run_papr(opts), opts);
    }
    if (cmp_cmd->parsed()) {
      const Options opts = make_options(cmp_flags);
      return emit(chaoswpt::cli::run_compare_multisine(
                      opts, parse_int_grid(cmp_tones), parse_grid(cmp_drive)),
                  opts);
    }
    const Options opts = make_options(self_flags);
    return emit(chaoswpt::cli::run_selftest(opts), opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return chaoswpt::cli::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return chaoswpt::cli::kConfigError;
  }
}
