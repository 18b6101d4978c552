#include "chaoswpt/receiver.hpp"

#include <cmath>
#include <stdexcept>

namespace chaoswpt::receiver {

namespace {

void check_inputs(const waveform::Frame& frame, double h, double p_t) {
  if (frame.samples.empty()) {
    throw std::invalid_argument("frame must be non-empty");
  }
  if (!(h >= 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("channel amplitude must be finite and >= 0");
  }
  if (!(p_t > 0.0)) {
    throw std::invalid_argument("power scale must be > 0");
  }
}

/// E{(sum of frame samples)^2} for unit chips (E{x^2} = 1/2, cross terms 0).
double mean_sum_power(const waveform::WaveformSpec& spec) {
  const double beta = spec.beta;
  switch (spec.scheme) {
    case waveform::Scheme::Dcsk:
    case waveform::Scheme::Unmodulated:
      return beta;
    case waveform::Scheme::SrDcsk: {
      const double zeta = spec.replication();
      return (1.0 + zeta * zeta) * spec.beta_r / 2.0;
    }
    case waveform::Scheme::OptimalSr:
      return (1.0 + beta * beta) / 2.0;
  }
  return 0.0;
}

/// sup over chip values in [-1,1] and bits of (sum of frame samples)^2.
double sup_sum_power(const waveform::WaveformSpec& spec) {
  const double beta = spec.beta;
  switch (spec.scheme) {
    case waveform::Scheme::Dcsk:
    case waveform::Scheme::Unmodulated:
      return 4.0 * beta * beta;
    case waveform::Scheme::SrDcsk: {
      const double zeta = spec.replication();
      const double peak = (1.0 + zeta) * spec.beta_r;
      return peak * peak;
    }
    case waveform::Scheme::OptimalSr:
      return (1.0 + beta) * (1.0 + beta);
  }
  return 0.0;
}

}  // namespace

double correlate(const waveform::Frame& frame, double h, double p_t) {
  check_inputs(frame, h, p_t);
  double sum = 0.0;
  for (double s : frame.samples) sum += s;
  return std::sqrt(p_t) * h * sum;
}

MomentPair correlator_moments(const waveform::Frame& frame, double h, double p_t) {
  double y = correlate(frame, h, p_t);
  double y2 = y * y;
  return MomentPair{y2, y2 * y2};
}

MomentPair no_correlator_moments(const waveform::Frame& frame, double h, double p_t) {
  check_inputs(frame, h, p_t);
  double sum2 = 0.0;
  double sum4 = 0.0;
  for (double s : frame.samples) {
    double s2 = s * s;
    sum2 += s2;
    sum4 += s2 * s2;
  }
  double h2 = h * h;
  return MomentPair{p_t * h2 * sum2, p_t * p_t * h2 * h2 * sum4};
}

double rectenna_dc(const MomentPair& moments, double k2_rant, double k4_rant2) {
  if (!(moments.m2 >= 0.0) || !(moments.m4 >= 0.0)) {
    throw std::invalid_argument("moments must be non-negative");
  }
  if (!(k2_rant >= 0.0) || !(k4_rant2 >= 0.0)) {
    throw std::invalid_argument("rectenna gain scales must be >= 0");
  }
  return k2_rant * moments.m2 + k4_rant2 * moments.m4;
}

double papr_theoretical(const waveform::WaveformSpec& spec, CorrelatorMode mode) {
  spec.validate();
  if (mode == CorrelatorMode::None) {
    return 2.0;  // sup s^2 = 1 over E{s^2} = 1/2, any scheme
  }
  return sup_sum_power(spec) / mean_sum_power(spec);
}

PaprResult measure_papr(const std::vector<waveform::Frame>& frames,
                        const std::vector<double>& h_per_frame,
                        const waveform::WaveformSpec& spec, CorrelatorMode mode) {
  spec.validate();
  if (frames.empty()) {
    throw std::invalid_argument("measure_papr needs at least one frame");
  }
  if (frames.size() != h_per_frame.size()) {
    throw std::invalid_argument("one channel draw per frame required");
  }
  const std::size_t frame_len = static_cast<std::size_t>(spec.frame_length());
  double peak = 0.0;
  double denom = 0.0;
  const double mean_power =
      mode == CorrelatorMode::FullSymbol ? mean_sum_power(spec) : 0.5;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& frame = frames[i];
    if (frame.samples.size() != frame_len) {
      throw std::invalid_argument("frame length does not match the waveform geometry");
    }
    const double h2 = h_per_frame[i] * h_per_frame[i];
    if (mode == CorrelatorMode::FullSymbol) {
      double sum = 0.0;
      for (double s : frame.samples) sum += s;
      peak = std::max(peak, h2 * sum * sum);
    } else {
      for (double s : frame.samples) peak = std::max(peak, h2 * s * s);
    }
    denom += h2 * mean_power;
  }
  denom /= static_cast<double>(frames.size());
  return PaprResult{peak / denom, papr_theoretical(spec, mode)};
}

}  // namespace chaoswpt::receiver
