#include "chaoswpt/waveform.hpp"

#include <cmath>
#include <stdexcept>

namespace chaoswpt::waveform {

namespace {

void check_bit(int bit) {
  if (bit != 1 && bit != -1) {
    throw std::invalid_argument("modulation bit must be +1 or -1");
  }
}

void check_chip(double chip) {
  if (!(std::fabs(chip) <= 1.0)) {
    throw std::invalid_argument("chip outside [-1, 1]");
  }
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Dcsk: return "dcsk";
    case Scheme::Unmodulated: return "unmodulated";
    case Scheme::SrDcsk: return "srdcsk";
    case Scheme::OptimalSr: return "optimal_sr";
  }
  return "unknown";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
  if (name == "dcsk") return Scheme::Dcsk;
  if (name == "unmodulated") return Scheme::Unmodulated;
  if (name == "srdcsk") return Scheme::SrDcsk;
  if (name == "optimal_sr") return Scheme::OptimalSr;
  return std::nullopt;
}

int WaveformSpec::frame_length() const {
  switch (scheme) {
    case Scheme::Dcsk:
    case Scheme::Unmodulated:
      return 2 * beta;
    case Scheme::SrDcsk:
      return beta_r + beta;
    case Scheme::OptimalSr:
      return 1 + beta;
  }
  return 0;
}

int WaveformSpec::replication() const {
  switch (scheme) {
    case Scheme::SrDcsk:
      return beta / beta_r;
    case Scheme::OptimalSr:
      return beta;
    default:
      return 1;
  }
}

int WaveformSpec::chips_per_symbol() const {
  switch (scheme) {
    case Scheme::Dcsk: return beta;
    case Scheme::Unmodulated: return 2 * beta;
    case Scheme::SrDcsk: return beta_r;
    case Scheme::OptimalSr: return 1;
  }
  return 0;
}

void WaveformSpec::validate() const {
  if (beta < 1) {
    throw std::invalid_argument("beta must be >= 1");
  }
  if (scheme == Scheme::SrDcsk) {
    if (beta_r < 1) {
      throw std::invalid_argument("beta_r must be >= 1");
    }
    if (beta % beta_r != 0) {
      throw std::invalid_argument("beta_r must divide beta");
    }
  }
  if (scheme == Scheme::OptimalSr && beta_r != 1) {
    throw std::invalid_argument("optimal_sr fixes beta_r = 1");
  }
}

Frame frame_dcsk(const chaos::ChipSequence& reference, int bit) {
  if (reference.empty()) {
    throw std::invalid_argument("reference must be non-empty");
  }
  check_bit(bit);
  Frame frame;
  frame.bit = bit;
  frame.samples.resize(2 * reference.size());
  const double d = static_cast<double>(bit);
  for (std::size_t k = 0; k < reference.size(); ++k) {
    check_chip(reference[k]);
    frame.samples[k] = reference[k];
    frame.samples[reference.size() + k] = d * reference[k];
  }
  return frame;
}

Frame frame_unmodulated(const chaos::ChipSequence& chips) {
  if (chips.empty()) {
    throw std::invalid_argument("chip sequence must be non-empty");
  }
  for (double chip : chips) check_chip(chip);
  Frame frame;
  frame.samples = chips;
  return frame;
}

Frame frame_srdcsk(const chaos::ChipSequence& reference, int bit, int beta) {
  if (reference.empty()) {
    throw std::invalid_argument("reference must be non-empty");
  }
  check_bit(bit);
  const int beta_r = static_cast<int>(reference.size());
  if (beta < 1 || beta % beta_r != 0) {
    throw std::invalid_argument("beta_r must divide beta");
  }
  const int zeta = beta / beta_r;
  Frame frame;
  frame.bit = bit;
  frame.samples.resize(static_cast<std::size_t>(beta_r + beta));
  const double d = static_cast<double>(bit);
  for (int k = 0; k < beta_r; ++k) {
    check_chip(reference[static_cast<std::size_t>(k)]);
    frame.samples[static_cast<std::size_t>(k)] = reference[static_cast<std::size_t>(k)];
  }
  for (int rep = 0; rep < zeta; ++rep) {
    for (int k = 0; k < beta_r; ++k) {
      frame.samples[static_cast<std::size_t>(beta_r + rep * beta_r + k)] =
          d * reference[static_cast<std::size_t>(k)];
    }
  }
  return frame;
}

Frame frame_optimal_sr(double chip, int bit, int beta) {
  check_chip(chip);
  check_bit(bit);
  if (beta < 1) {
    throw std::invalid_argument("beta must be >= 1");
  }
  Frame frame;
  frame.bit = bit;
  frame.samples.assign(static_cast<std::size_t>(1 + beta),
                       static_cast<double>(bit) * chip);
  frame.samples[0] = chip;
  return frame;
}

}  // namespace chaoswpt::waveform
