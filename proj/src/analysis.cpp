#include "chaoswpt/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "chaoswpt/detail/chunked.hpp"
#include "chaoswpt/stats.hpp"

namespace chaoswpt::analysis {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void check_shape(double m) {
  if (std::isinf(m)) return;
  if (!(m >= 1.0)) {
    throw std::invalid_argument("Nakagami shape m must be >= 1 (or inf)");
  }
}

void check_beta(int beta) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
}

double nak(double m) { return channel::nakagami_fourth_moment(m); }

}  // namespace

double z_mc(double eps1, double eps2, int beta, double m) {
  check_beta(beta);
  check_shape(m);
  double b = beta;
  return eps1 * b + eps2 * (3.0 * nak(m)) * b * (2.0 * b - 1.0);
}

double z_mnc(double eps1, double eps2, int beta, double m) {
  check_beta(beta);
  check_shape(m);
  double b = beta;
  return eps1 * b + eps2 * (3.0 * nak(m) / 4.0) * b;
}

double z_um_c(double eps1, double eps2, int beta, double m) {
  check_beta(beta);
  check_shape(m);
  double b = beta;
  return eps1 * b + eps2 * (3.0 * nak(m)) * b * (b - 0.25);
}

double z_um_nc(double eps1, double eps2, int beta, double m) {
  return z_mnc(eps1, eps2, beta, m);
}

double delta_gap(double eps2, int beta, double m1, double m2) {
  check_beta(beta);
  check_shape(m1);
  check_shape(m2);
  double b = beta;
  double bracket;
  if (std::isinf(m1) && std::isinf(m2)) {
    bracket = (2.0 * b - 1.0) - (b - 0.25);
  } else if (std::isinf(m1)) {
    bracket = (2.0 * b - 1.0) - nak(m2) * (b - 0.25);
  } else if (std::isinf(m2)) {
    bracket = nak(m1) * (2.0 * b - 1.0) - (b - 0.25);
  } else {
    // Product form: exact in IEEE doubles for integer-valued shapes and
    // betas, so the sign change lands exactly on the crossover.
    bracket = (4.0 * (1.0 + m1) * m2 * (2.0 * b - 1.0) -
               (1.0 + m2) * m1 * (4.0 * b - 1.0)) /
              (4.0 * m1 * m2);
  }
  return eps2 * 3.0 * b * bracket;
}

std::optional<double> beta_opt(double m1, double m2) {
  check_shape(m1);
  check_shape(m2);
  if (!std::isinf(m1) && !std::isinf(m2)) {
    double num = 4.0 * m2 + 3.0 * m1 * m2 - m1;
    double den = 4.0 * (2.0 * m2 + m1 * m2 - m1);
    if (!(den > 0.0)) return std::nullopt;  // unreachable for finite m >= 1
    return std::max(0.0, num / den);
  }
  double a = nak(m1);
  double b = nak(m2);
  double den = 2.0 * a - b;
  if (!(den > 0.0)) return std::nullopt;
  return std::max(0.0, (a - b / 4.0) / den);
}

double z_sr(double eps1, double eps2, int beta, int beta_r, double m) {
  check_beta(beta);
  check_shape(m);
  if (beta_r < 0) throw std::invalid_argument("beta_r must be >= 0");
  double b = beta;
  if (beta_r == 0) {
    return 0.5 * eps1 * b * b + eps2 * (3.0 * nak(m) / 8.0) * b * b * b * b;
  }
  if (beta % beta_r != 0) {
    throw std::invalid_argument("beta_r must divide beta");
  }
  double br = beta_r;
  double zeta = static_cast<double>(beta / beta_r);
  double zeta2 = zeta * zeta;
  return eps1 * (br * br + b * b) / (2.0 * br) +
         eps2 * (3.0 * nak(m) / 8.0) * (1.0 + 6.0 * zeta2 + zeta2 * zeta2) *
             (2.0 * br * br - br);
}

double z_sr_opt(double eps1, double eps2, int beta, double m) {
  check_beta(beta);
  check_shape(m);
  double b = beta;
  double b2 = b * b;
  return 0.5 * eps1 * (1.0 + b2) +
         eps2 * (3.0 * nak(m) / 8.0) * (1.0 + 6.0 * b2 + b2 * b2);
}

std::optional<double> closed_form_dc(const waveform::WaveformSpec& spec,
                                     receiver::CorrelatorMode mode,
                                     const channel::ChannelParams& channel_params,
                                     const channel::LinkBudget& budget,
                                     const HpaModel& hpa) {
  spec.validate();
  channel_params.validate();
  budget.validate();
  channel::LinkBudget delivered = budget;
  delivered.p_t_watts = hpa_delivered_power(budget.p_t_watts, hpa);
  const auto gains = channel::effective_gains(delivered);
  const double m = channel_params.m;
  const bool correlator = mode == receiver::CorrelatorMode::FullSymbol;
  switch (spec.scheme) {
    case waveform::Scheme::Dcsk:
      return correlator ? z_mc(gains.eps1, gains.eps2, spec.beta, m)
                        : z_mnc(gains.eps1, gains.eps2, spec.beta, m);
    case waveform::Scheme::Unmodulated:
      return correlator ? z_um_c(gains.eps1, gains.eps2, spec.beta, m)
                        : z_um_nc(gains.eps1, gains.eps2, spec.beta, m);
    case waveform::Scheme::SrDcsk:
      if (!correlator) return std::nullopt;
      return z_sr(gains.eps1, gains.eps2, spec.beta, spec.beta_r, m);
    case waveform::Scheme::OptimalSr:
      if (!correlator) return std::nullopt;
      return z_sr_opt(gains.eps1, gains.eps2, spec.beta, m);
  }
  return std::nullopt;
}

MultisineMoments multisine_time_moments(int n_tones, double p_eff_watts,
                                        int samples_per_period, int periods) {
  if (n_tones < 1) throw std::invalid_argument("n_tones must be >= 1");
  if (periods < 1) throw std::invalid_argument("periods must be >= 1");
  if (samples_per_period < 8 * n_tones) {
    throw std::invalid_argument("need >= 8 samples per highest-tone period");
  }
  if (!(p_eff_watts > 0.0)) throw std::invalid_argument("power must be > 0");

  const double amplitude = std::sqrt(2.0 * p_eff_watts / n_tones);
  const std::int64_t total =
      static_cast<std::int64_t>(samples_per_period) * periods;
  KahanSum sum2;
  KahanSum sum4;
  MultisineMoments out;
  for (std::int64_t j = 0; j < total; ++j) {
    const double t = static_cast<double>(j) / samples_per_period;
    double s = 0.0;
    for (int n = 1; n <= n_tones; ++n) s += std::cos(kTwoPi * n * t);
    s *= amplitude;
    const double s2 = s * s;
    sum2.add(s2);
    sum4.add(s2 * s2);
    out.peak = std::max(out.peak, s2);
  }
  out.t2 = sum2.value() / static_cast<double>(total);
  out.t4 = sum4.value() / static_cast<double>(total);
  return out;
}

void MultisineConfig::validate() const {
  if (n_tones < 1) throw std::invalid_argument("n_tones must be >= 1");
  if (!(p_t_watts > 0.0)) throw std::invalid_argument("P_t must be > 0");
  hpa.validate();
  channel.validate();
  budget.validate();
  if (samples_per_period < 8 * n_tones) {
    throw std::invalid_argument("need >= 8 samples per highest-tone period");
  }
  if (periods < 1) throw std::invalid_argument("periods must be >= 1");
  if (n_blocks < 1) throw std::invalid_argument("n_blocks must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must be in (0,1)");
  }
}

namespace {

struct MultisineTerms {
  double c2 = 0.0;  // multiplies h^2
  double c4 = 0.0;  // multiplies h^4
};

MultisineTerms multisine_terms(const MultisineConfig& config) {
  const double p_eff = hpa_delivered_power(config.p_t_watts, config.hpa);
  const auto moments = multisine_time_moments(
      config.n_tones, p_eff, config.samples_per_period, config.periods);
  const double g = config.budget.path_gain();
  return MultisineTerms{config.budget.k2_rant() * g * moments.t2,
                        config.budget.k4_rant2() * g * g * moments.t4};
}

}  // namespace

double multisine_dc(const MultisineConfig& config) {
  config.validate();
  const auto terms = multisine_terms(config);
  return terms.c2 + terms.c4 * config.channel.fourth_moment();
}

mc::HarvestEstimate multisine_baseline(const MultisineConfig& config) {
  config.validate();
  const auto terms = multisine_terms(config);

  auto per_block = [&](RunningMoments& state, Rng& rng) {
    const double h = channel::draw_amplitude(config.channel, rng);
    const double h2 = h * h;
    state.add(terms.c2 * h2 + terms.c4 * h2 * h2);
  };
  auto merge = [](RunningMoments& into, RunningMoments&& from) {
    into.merge(from);
  };
  RunningMoments total = mc::detail::run_chunked<RunningMoments>(
      config.n_blocks, config.seed, config.threads, per_block, merge);

  mc::HarvestEstimate est;
  est.mean = total.mean;
  est.std_error = total.std_error();
  const double q = inverse_normal_cdf(0.5 + config.confidence / 2.0);
  est.ci_low = est.mean - q * est.std_error;
  est.ci_high = est.mean + q * est.std_error;
  est.n_symbols = config.n_blocks;
  est.seed = config.seed;
  est.analytic = multisine_dc(config);
  if (*est.analytic > 0.0) {
    est.rel_dev = std::fabs(est.mean - *est.analytic) / *est.analytic;
  }
  return est;
}

}  // namespace chaoswpt::analysis
