#include "chaoswpt/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "chaoswpt/analysis.hpp"
#include "chaoswpt/detail/chunked.hpp"
#include "chaoswpt/stats.hpp"

namespace chaoswpt::mc {

namespace {

struct HarvestState {
  RunningMoments moments;
  chaos::ChipSequence ref;
  waveform::Frame frame;
};

struct PaprState {
  std::vector<waveform::Frame> frames;
  std::vector<double> ones;
  HarvestState scratch;
  double peak_ratio = 0.0;
};

/// Frames per measure_papr batch; bounds per-worker frame storage.
constexpr std::int64_t kPaprBatch = 1024;

waveform::Frame build_frame(const SimConfig& config, HarvestState& state, Rng& rng) {
  const auto& spec = config.waveform;
  switch (spec.scheme) {
    case waveform::Scheme::Dcsk:
      chaos::generate_reference(spec.beta, config.chaos, rng, state.ref);
      return waveform::frame_dcsk(state.ref, chaos::random_bit(rng));
    case waveform::Scheme::Unmodulated:
      chaos::generate_reference(2 * spec.beta, config.chaos, rng, state.ref);
      return waveform::frame_unmodulated(state.ref);
    case waveform::Scheme::SrDcsk:
      chaos::generate_reference(spec.beta_r, config.chaos, rng, state.ref);
      return waveform::frame_srdcsk(state.ref, chaos::random_bit(rng), spec.beta);
    case waveform::Scheme::OptimalSr: {
      double chip = chaos::sample_invariant(rng);
      return waveform::frame_optimal_sr(chip, chaos::random_bit(rng), spec.beta);
    }
  }
  throw std::logic_error("unknown scheme");
}

}  // namespace

void SimConfig::validate() const {
  waveform.validate();
  channel.validate();
  budget.validate();
  chaos.validate();
  hpa.validate();
  if (n_symbols < 1) {
    throw std::invalid_argument("n_symbols must be >= 1");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must be in (0,1)");
  }
}

HarvestEstimate estimate_harvest(const SimConfig& config) {
  config.validate();
  const double p_delivered =
      analysis::hpa_delivered_power(config.budget.p_t_watts, config.hpa);
  const double p_op = p_delivered * config.budget.path_gain();
  const double k2_rant = config.budget.k2_rant();
  const double k4_rant2 = config.budget.k4_rant2();
  const bool correlator = config.correlator == receiver::CorrelatorMode::FullSymbol;

  auto per_symbol = [&](HarvestState& state, Rng& rng) {
    state.frame = build_frame(config, state, rng);
    const double h = channel::draw_amplitude(config.channel, rng);
    const receiver::MomentPair moments =
        correlator ? receiver::correlator_moments(state.frame, h, p_op)
                   : receiver::no_correlator_moments(state.frame, h, p_op);
    state.moments.add(receiver::rectenna_dc(moments, k2_rant, k4_rant2));
  };
  auto merge = [](HarvestState& into, HarvestState&& from) {
    into.moments.merge(from.moments);
  };

  HarvestState total = detail::run_chunked<HarvestState>(
      config.n_symbols, config.seed, config.threads, per_symbol, merge);

  HarvestEstimate est;
  est.mean = total.moments.mean;
  est.std_error = total.moments.std_error();
  const double q = inverse_normal_cdf(0.5 + config.confidence / 2.0);
  est.ci_low = est.mean - q * est.std_error;
  est.ci_high = est.mean + q * est.std_error;
  est.n_symbols = config.n_symbols;
  est.seed = config.seed;
  est.analytic = analysis::closed_form_dc(config.waveform, config.correlator,
                                          config.channel, config.budget, config.hpa);
  if (est.analytic && *est.analytic > 0.0) {
    est.rel_dev = std::fabs(est.mean - *est.analytic) / *est.analytic;
  }
  return est;
}

PaprEstimate estimate_papr(const SimConfig& config) {
  config.validate();

  auto per_symbol = [&](PaprState& state, Rng& rng) {
    state.frames.push_back(build_frame(config, state.scratch, rng));
    if (state.frames.size() == kPaprBatch) {
      state.ones.assign(state.frames.size(), 1.0);
      auto result = receiver::measure_papr(state.frames, state.ones,
                                           config.waveform, config.correlator);
      state.peak_ratio = std::max(state.peak_ratio, result.empirical);
      state.frames.clear();
    }
  };
  auto merge = [&](PaprState& into, PaprState&& from) {
    if (!from.frames.empty()) {
      from.ones.assign(from.frames.size(), 1.0);
      auto result = receiver::measure_papr(from.frames, from.ones,
                                           config.waveform, config.correlator);
      from.peak_ratio = std::max(from.peak_ratio, result.empirical);
    }
    into.peak_ratio = std::max(into.peak_ratio, from.peak_ratio);
  };

  PaprState total = detail::run_chunked<PaprState>(
      config.n_symbols, config.seed, config.threads, per_symbol, merge);

  PaprEstimate est;
  est.empirical = total.peak_ratio;
  est.theoretical = receiver::papr_theoretical(config.waveform, config.correlator);
  est.n_symbols = config.n_symbols;
  est.seed = config.seed;
  return est;
}

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Beta: return "beta";
    case SweepParameter::BetaR: return "beta_r";
    case SweepParameter::M: return "m";
    case SweepParameter::PtWatts: return "p_t";
  }
  return "unknown";
}

namespace {

void apply_sweep_value(SimConfig& config, SweepParameter parameter, double value) {
  auto as_positive_int = [&](const char* what) {
    if (!(value >= 1.0) || value != std::floor(value) || value > 1e9) {
      throw std::invalid_argument(std::string(what) + " grid value must be a positive integer");
    }
    return static_cast<int>(value);
  };
  switch (parameter) {
    case SweepParameter::Beta:
      config.waveform.beta = as_positive_int("beta");
      break;
    case SweepParameter::BetaR:
      config.waveform.beta_r = as_positive_int("beta_r");
      break;
    case SweepParameter::M:
      config.channel.m = value;
      break;
    case SweepParameter::PtWatts:
      config.budget.p_t_watts = value;
      break;
  }
}

}  // namespace

std::vector<SweepPoint> sweep(SweepParameter parameter,
                              const std::vector<double>& grid,
                              const SimConfig& base) {
  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SweepPoint point;
    point.value = grid[i];
    SimConfig config = base;
    config.seed = mix_seed(base.seed, static_cast<std::uint64_t>(i));
    try {
      apply_sweep_value(config, parameter, grid[i]);
      point.estimate = estimate_harvest(config);
    } catch (const std::invalid_argument& e) {
      point.error = e.what();
    }
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace chaoswpt::mc
