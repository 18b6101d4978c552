#pragma once

#include <string>
#include <vector>

#include "chaoswpt/config.hpp"

namespace chaoswpt::cli {

struct ExperimentSpec {
  std::string name;  // one of experiment_names(), or "custom"
  Options options;
};

struct RunResult {
  int exit_code = kOk;
  std::string csv;      // header + rows; may be empty (selftest)
  std::string summary;  // human-readable notes, one line each
};

const std::vector<std::string>& experiment_names();

std::string csv_header();

/// Canonical experiments (named grids) plus "custom" (single configured run).
RunResult run_experiment(const ExperimentSpec& spec);

/// One row per grid value of `param` (beta, beta_r, m, pt_dbm, n_tones).
/// m grids accept inf; pt_dbm grids are in dBm; n_tones sweeps the multisine.
RunResult run_sweep(const std::string& param, const std::vector<double>& grid,
                    const Options& base);

/// Peak-to-average report for the configured waveform, one row.
RunResult run_papr(const Options& base);

/// Chaotic harvester vs multisine baselines over tone counts and drive levels.
RunResult run_compare_multisine(const Options& base,
                                const std::vector<int>& tone_counts,
                                const std::vector<double>& pt_dbm_grid);

/// Fast deterministic sanity checks; no CSV output.
RunResult run_selftest(const Options& base);

}  // namespace chaoswpt::cli
