#pragma once

#include <cstdint>
#include <optional>

#include "chaoswpt/channel.hpp"
#include "chaoswpt/hpa.hpp"
#include "chaoswpt/montecarlo.hpp"
#include "chaoswpt/receiver.hpp"
#include "chaoswpt/waveform.hpp"

namespace chaoswpt::analysis {

/// Closed-form expected harvested DC. eps1/eps2 are the effective link gains
/// (see channel::effective_gains), beta the spreading factor, m the Nakagami
/// shape (infinity = no fading, (1+m)/m -> 1).

/// DCSK, full-symbol correlator: eps1*beta + eps2*3*((1+m)/m)*beta*(2beta-1).
double z_mc(double eps1, double eps2, int beta, double m);

/// DCSK, no correlator: eps1*beta + eps2*(3(1+m)/(4m))*beta.
double z_mnc(double eps1, double eps2, int beta, double m);

/// Unmodulated 2*beta chips, full-symbol correlator:
/// eps1*beta + eps2*3*((1+m)/m)*beta*(beta-1/4).
double z_um_c(double eps1, double eps2, int beta, double m);

/// Unmodulated, no correlator; the per-sample moments cannot see the bit, so
/// this is the same expression as z_mnc.
double z_um_nc(double eps1, double eps2, int beta, double m);

/// Gap z_mc(m1) - z_um_c(m2) between a DCSK link fading with m1 and an
/// unmodulated link fading with m2 (the eps1*beta terms cancel). Evaluated in
/// a product form that is exact for integer-valued shapes, so the sign change
/// lands exactly on the crossover.
double delta_gap(double eps2, int beta, double m1, double m2);

/// Spreading factor at which delta_gap crosses zero:
/// (4m2 + 3m1m2 - m1) / (4(2m2 + m1m2 - m1)), clamped at 0. Empty when the
/// denominator is <= 0 (no finite threshold; only reachable via m1 = inf).
std::optional<double> beta_opt(double m1, double m2);

/// SR-DCSK with reference length beta_r (a divisor of beta), full-symbol
/// correlator. beta_r = 0 selects the documented limit form
/// eps1*beta^2/2 + eps2*(3(1+m)/(8m))*beta^4.
double z_sr(double eps1, double eps2, int beta, int beta_r, double m);

/// Single-chip reference (beta_r = 1):
/// eps1*(1+beta^2)/2 + eps2*(3(1+m)/(8m))*(1+6beta^2+beta^4).
double z_sr_opt(double eps1, double eps2, int beta, double m);

/// The closed form paired with a simulation configuration, evaluated at the
/// delivered power hpa_delivered_power(budget.p_t_watts, hpa). Empty for
/// combinations the source does not cover (SR schemes without a correlator).
std::optional<double> closed_form_dc(const waveform::WaveformSpec& spec,
                                     receiver::CorrelatorMode mode,
                                     const channel::ChannelParams& channel,
                                     const channel::LinkBudget& budget,
                                     const HpaModel& hpa = HpaModel{});

/// Deterministic time averages of one multisine period at a given delivered
/// power: s(t) = sqrt(2 P_eff / N) * sum_n cos(2 pi n t), n = 1..N.
struct MultisineMoments {
  double t2 = 0.0;    // time average of s^2 (= P_eff exactly)
  double t4 = 0.0;    // time average of s^4
  double peak = 0.0;  // max s^2 over the sampled period
};

/// Uniform sampling of one fundamental period is exact for trigonometric
/// moments once samples_per_period > 4N (s^4 has no higher harmonic), hence
/// the >= 8N floor.
MultisineMoments multisine_time_moments(int n_tones, double p_eff_watts,
                                        int samples_per_period, int periods);

struct MultisineConfig {
  int n_tones = 16;
  double p_t_watts = 1.0;
  HpaModel hpa;
  channel::ChannelParams channel;
  channel::LinkBudget budget;     // geometry/rectenna only; power comes from p_t_watts
  int samples_per_period = 1024;  // >= 8 * n_tones
  int periods = 1;
  std::int64_t n_blocks = 100'000;  // fading draws
  std::uint64_t seed = kDefaultSeed;
  double confidence = 0.99;
  int threads = 1;

  void validate() const;
};

/// Expected harvested DC for the multisine baseline with exact fading
/// moments (E{h^2} = 1, E{h^4} = (1+m)/m): deterministic companion value to
/// multisine_baseline and the analytic pairing for its CSV rows.
double multisine_dc(const MultisineConfig& config);

/// Monte Carlo multisine baseline: the per-period time averages are computed
/// once, then fading blocks are drawn with the same chunked deterministic
/// scheme as estimate_harvest. `analytic` carries multisine_dc(config).
mc::HarvestEstimate multisine_baseline(const MultisineConfig& config);

}  // namespace chaoswpt::analysis
