#include "chaoswpt/channel.hpp"

#include <stdexcept>

namespace chaoswpt::channel {

double nakagami_fourth_moment(double m) {
  if (std::isinf(m)) return 1.0;
  return (1.0 + m) / m;
}

void ChannelParams::validate() const {
  if (std::isinf(m)) return;
  if (!(m >= 1.0)) {
    throw std::invalid_argument("Nakagami shape m must be >= 1 (or inf)");
  }
}

double nakagami_amplitude(double m, Rng& rng) {
  if (!(m >= 1.0) || std::isinf(m)) {
    throw std::invalid_argument("nakagami_amplitude requires finite m >= 1");
  }
  return std::sqrt(rng.gamma(m) / m);
}

double draw_amplitude(const ChannelParams& params, Rng& rng) {
  if (params.no_fading()) return 1.0;
  return nakagami_amplitude(params.m, rng);
}

double rice_to_nakagami(double k_factor) {
  if (!(k_factor >= 0.0)) {
    throw std::invalid_argument("Rice K-factor must be >= 0");
  }
  if (std::isinf(k_factor)) return kNoFading;
  return (k_factor + 1.0) * (k_factor + 1.0) / (2.0 * k_factor + 1.0);
}

double LinkBudget::path_gain() const {
  return std::pow(distance_m, -path_loss_exponent);
}

double LinkBudget::eps1() const {
  return path_gain() * k2 * r_ant_ohms * p_t_watts;
}

double LinkBudget::eps2() const {
  double g = path_gain();
  return g * g * k4 * r_ant_ohms * r_ant_ohms * p_t_watts * p_t_watts;
}

void LinkBudget::validate() const {
  if (!(p_t_watts > 0.0)) throw std::invalid_argument("P_t must be > 0");
  if (!(distance_m > 0.0)) throw std::invalid_argument("distance must be > 0");
  if (!(path_loss_exponent > 0.0)) {
    throw std::invalid_argument("path-loss exponent must be > 0");
  }
  if (!(k2 >= 0.0) || !(k4 >= 0.0)) {
    throw std::invalid_argument("rectenna coefficients must be >= 0");
  }
  if (!(r_ant_ohms > 0.0)) {
    throw std::invalid_argument("antenna resistance must be > 0");
  }
}

EffectiveGains effective_gains(const LinkBudget& budget) {
  budget.validate();
  return EffectiveGains{budget.eps1(), budget.eps2()};
}

}  // namespace chaoswpt::channel
