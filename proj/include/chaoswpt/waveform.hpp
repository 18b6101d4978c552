#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "chaoswpt/chaos.hpp"

namespace chaoswpt::waveform {

enum class Scheme {
  Dcsk,         // [reference | bit * reference], frame length 2*beta
  Unmodulated,  // 2*beta raw chips, no bit
  SrDcsk,       // [reference(beta_r) | bit * reference repeated zeta times]
  OptimalSr     // SrDcsk with beta_r = 1, frame length beta + 1
};

std::string_view to_string(Scheme scheme);
std::optional<Scheme> scheme_from_string(std::string_view name);

struct WaveformSpec {
  Scheme scheme = Scheme::Dcsk;
  int beta = 25;   // spreading factor, >= 1
  int beta_r = 1;  // SR reference length; must divide beta. Ignored by
                   // Dcsk/Unmodulated; forced to 1 by OptimalSr.

  int frame_length() const;
  int replication() const;  // zeta = beta / beta_r for the SR schemes
  /// Reference chips drawn per symbol (beta, 2*beta, beta_r or 1).
  int chips_per_symbol() const;
  void validate() const;
};

struct Frame {
  std::vector<double> samples;
  std::optional<int> bit;  // +1/-1; empty for unmodulated frames
};

/// [ref | bit*ref]. Errors: empty reference, bit not in {-1, +1}.
Frame frame_dcsk(const chaos::ChipSequence& reference, int bit);

/// Passes 2*beta chips through unchanged; carries no bit.
Frame frame_unmodulated(const chaos::ChipSequence& chips);

/// [ref | bit*ref repeated beta/beta_r times] where beta_r = reference size.
/// Errors: beta_r does not divide beta.
Frame frame_srdcsk(const chaos::ChipSequence& reference, int bit, int beta);

/// Single-chip reference frame: [chip | bit*chip repeated beta times].
Frame frame_optimal_sr(double chip, int bit, int beta);

}  // namespace chaoswpt::waveform
