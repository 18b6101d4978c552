#pragma once

#include <cmath>

namespace chaoswpt::analysis {

enum class HpaKind { Ideal, Rapp };

/// Transmit amplifier model. The Rapp curve limits the waveform's amplitude
/// scale sqrt(P_t) (delivered power P_eff = rapp(sqrt(P_t))^2, waveform shape
/// preserved): a power-limited transmitter keeps sending the same waveform at
/// a capped power, it does not clip individual samples. Defaults: saturation
/// amplitude = sqrt(0.31623 W), i.e. a 25 dBm maximum deliverable power, and
/// smoothness 6 (the smallest integer knee sharp enough that harvested DC
/// grows < 1% between 28 and 34 dBm input power).
struct HpaModel {
  HpaKind kind = HpaKind::Ideal;
  double smoothness = 6.0;                     // Rapp p, > 0
  double saturation_amplitude = 0.5623413251903491;  // sqrt(10^(-0.5)) sqrt(W)

  void validate() const;
};

/// Rapp transfer x / (1 + |x/A_sat|^(2p))^(1/(2p)); identity for Ideal.
/// Odd in x, monotone, |output| < A_sat.
double hpa_apply(double sample, const HpaModel& model);

/// Delivered power after the amplitude-scale limiter: rapp(sqrt(p_t))^2.
double hpa_delivered_power(double p_t_watts, const HpaModel& model);

}  // namespace chaoswpt::analysis
