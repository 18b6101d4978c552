#pragma once

#include <cmath>
#include <limits>

#include "chaoswpt/rng.hpp"

namespace chaoswpt::channel {

inline constexpr double kNoFading = std::numeric_limits<double>::infinity();

/// E{|h|^4} for a unit-power Nakagami-m envelope: (1+m)/m, 1 when m = inf.
double nakagami_fourth_moment(double m);

struct ChannelParams {
  double m = 1.0;  // Nakagami shape, >= 1; infinity = no fading (|h| = 1)

  bool no_fading() const { return std::isinf(m); }
  double fourth_moment() const { return nakagami_fourth_moment(m); }
  void validate() const;
};

/// Unit-power Nakagami-m envelope: sqrt(G/m) with G ~ Gamma(m, 1), so
/// E{|h|^2} = 1 and E{|h|^4} = (1+m)/m. Requires finite m >= 1.
double nakagami_amplitude(double m, Rng& rng);

/// Per-frame block-fading draw; returns the constant 1 when fading is off.
double draw_amplitude(const ChannelParams& params, Rng& rng);

/// Nakagami shape matching a Rice K-factor: m = (K+1)^2 / (2K+1), K >= 0.
double rice_to_nakagami(double k_factor);

/// Transmit power, geometry and rectenna constants of one link.
struct LinkBudget {
  double p_t_watts = 1.0;          // 30 dBm
  double distance_m = 20.0;
  double path_loss_exponent = 4.0;
  double k2 = 0.0034;              // rectenna 2nd-order coefficient
  double k4 = 0.3829;              // rectenna 4th-order coefficient
  double r_ant_ohms = 50.0;

  double path_gain() const;  // r^-alpha
  double eps1() const;       // r^-alpha  * k2 * R_ant   * P_t
  double eps2() const;       // r^-2alpha * k4 * R_ant^2 * P_t^2
  double k2_rant() const { return k2 * r_ant_ohms; }
  double k4_rant2() const { return k4 * r_ant_ohms * r_ant_ohms; }
  void validate() const;
};

struct EffectiveGains {
  double eps1 = 0.0;
  double eps2 = 0.0;
};

EffectiveGains effective_gains(const LinkBudget& budget);

}  // namespace chaoswpt::channel
