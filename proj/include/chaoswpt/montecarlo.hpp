#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaoswpt/channel.hpp"
#include "chaoswpt/chaos.hpp"
#include "chaoswpt/hpa.hpp"
#include "chaoswpt/receiver.hpp"
#include "chaoswpt/rng.hpp"
#include "chaoswpt/waveform.hpp"

namespace chaoswpt::mc {

/// One Monte Carlo run: per symbol draw a bit and reference chips, frame
/// them, draw a block-fading amplitude, form the harvester-input moments and
/// map them through the rectenna law. The power scale fed to the receiver
/// ops is the delivered power times the path gain, so the estimate is
/// directly comparable to the eps1/eps2 closed forms.
struct SimConfig {
  waveform::WaveformSpec waveform;
  receiver::CorrelatorMode correlator = receiver::CorrelatorMode::FullSymbol;
  channel::ChannelParams channel;
  channel::LinkBudget budget;
  chaos::ChaosConfig chaos;
  analysis::HpaModel hpa;  // Ideal unless an amplifier experiment sets it

  std::int64_t n_symbols = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  double confidence = 0.99;  // two-sided CLT confidence for the interval
  int threads = 1;           // worker count; never changes the estimate

  void validate() const;
};

struct HarvestEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::int64_t n_symbols = 0;
  std::uint64_t seed = 0;
  std::optional<double> analytic;  // paired closed form, when one exists
  std::optional<double> rel_dev;   // |mean - analytic| / analytic
};

/// Estimate of the expected harvested DC. Deterministic for a fixed seed and
/// config: symbols are processed in fixed-size chunks with per-chunk seeds
/// derived as mix_seed(seed, chunk index) and chunk results merged in index
/// order, so the result is bit-identical for any `threads` value.
HarvestEstimate estimate_harvest(const SimConfig& config);

struct PaprEstimate {
  double empirical = 0.0;
  double theoretical = 0.0;
  std::int64_t n_symbols = 0;
  std::uint64_t seed = 0;
};

/// Peak-to-average ratio over a run. The ratio is conditioned on one fixed
/// channel draw, in which every h (and the power scale) cancels exactly, so
/// fading and budget fields of the config do not influence the result.
PaprEstimate estimate_papr(const SimConfig& config);

enum class SweepParameter { Beta, BetaR, M, PtWatts };

std::string_view to_string(SweepParameter p);

struct SweepPoint {
  double value = 0.0;
  std::optional<HarvestEstimate> estimate;
  std::string error;  // set when the grid value is invalid for the base config
};

/// Runs estimate_harvest over a parameter grid. Point i uses child seed
/// mix_seed(base.seed, i). Invalid points (e.g. a beta_r that does not
/// divide beta) are reported in-place, not fatal. A tone-count sweep is a
/// multisine experiment, not a chaotic one, and lives with the multisine
/// comparison path.
std::vector<SweepPoint> sweep(SweepParameter parameter,
                              const std::vector<double>& grid,
                              const SimConfig& base);

}  // namespace chaoswpt::mc
