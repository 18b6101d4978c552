#pragma once

#include <cmath>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chaoswpt/analysis.hpp"
#include "chaoswpt/montecarlo.hpp"

namespace chaoswpt::cli {

enum ExitCode : int {
  kOk = 0,
  kToleranceBreach = 1,
  kConfigError = 2,
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double watts_from_dbm(double dbm) {
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

inline double dbm_from_watts(double watts) {
  return 30.0 + 10.0 * std::log10(watts);
}

/// Everything a run needs, configurable via file keys and/or CLI flags.
struct Options {
  mc::SimConfig sim;
  int n_tones = 16;       // multisine comparisons
  bool strict = true;     // tolerance breaches affect the exit code
  std::string out_path;   // CSV destination; empty = stdout
};

/// Ordered key=value pairs ('#' starts a comment, later keys win).
using KeyValues = std::vector<std::pair<std::string, std::string>>;

KeyValues parse_config(std::istream& in);
KeyValues parse_config_file(const std::string& path);

/// Applies keys onto options; throws ConfigError naming the offending key.
/// Keys: scheme, beta, beta_r, psi (frame|none), m (number or inf), pt_dbm,
/// distance_m, alpha, k2, k4, r_ant, degree, trajectory (per_symbol|iid),
/// hpa (ideal|rapp), hpa_smoothness, hpa_sat_dbm, n_symbols, seed,
/// confidence, threads, n_tones, strict, out.
void apply_overrides(Options& options, const KeyValues& keys);

}  // namespace chaoswpt::cli
