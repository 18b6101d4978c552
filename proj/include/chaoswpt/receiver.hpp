#pragma once

#include <vector>

#include "chaoswpt/waveform.hpp"

namespace chaoswpt::receiver {

/// Correlator span psi: either no correlator (psi = 1, the harvester sees
/// each sample) or a full-symbol analog correlator (psi = frame length).
enum class CorrelatorMode { None, FullSymbol };

struct ReceiverConfig {
  CorrelatorMode mode = CorrelatorMode::FullSymbol;

  int psi(int frame_length) const {
    return mode == CorrelatorMode::FullSymbol ? frame_length : 1;
  }
};

/// Even moments of the harvester input for one symbol.
struct MomentPair {
  double m2 = 0.0;
  double m4 = 0.0;
};

/// Full-symbol correlator output sqrt(p_t) * h * sum(samples).
/// p_t is the power scale at the harvester input; callers that model path
/// loss fold r^-alpha into it (the closed forms carry the same factors
/// inside eps1/eps2 instead; a dedicated test pins the two conventions to
/// each other).
double correlate(const waveform::Frame& frame, double h, double p_t);

/// (y^2, y^4) of the correlator output above.
MomentPair correlator_moments(const waveform::Frame& frame, double h, double p_t);

/// Per-sample moments without a correlator:
/// m2 = p_t h^2 sum(s^2), m4 = p_t^2 h^4 sum(s^4).
MomentPair no_correlator_moments(const waveform::Frame& frame, double h, double p_t);

/// Fourth-order rectenna DC output: k2_rant * m2 + k4_rant2 * m4 where
/// k2_rant = k2 * R_ant and k4_rant2 = k4 * R_ant^2. Pass k4_rant2 = 0 for
/// the linear-rectenna comparison mode. Moments must be non-negative.
double rectenna_dc(const MomentPair& moments, double k2_rant, double k4_rant2);

struct PaprResult {
  double empirical = 0.0;    // observed peak power / expected average power
  double theoretical = 0.0;  // supremum power / expected average power
};

/// Analytic peak-to-average power ratio for a scheme/correlator pair, from
/// the same supremum (all chips at +/-1) over expected-power argument that
/// gives 2 (psi = 1) and 4*beta (DCSK full-symbol correlator). The schemes
/// the source leaves open follow from identical algebra:
/// unmodulated 4*beta; SR 2*beta_r*(1+zeta)^2/(1+zeta^2); single-chip
/// reference 2*(1+beta)^2/(1+beta^2).
double papr_theoretical(const waveform::WaveformSpec& spec, CorrelatorMode mode);

/// Empirical PAPR of a run: max observed instantaneous power divided by the
/// expected average power conditioned on the per-frame channel draws. The
/// expectation (not the run's sample mean) in the denominator makes
/// empirical <= theoretical hold for every seed when h is constant, and any
/// common h scale cancels exactly. Frames must all match `spec`.
PaprResult measure_papr(const std::vector<waveform::Frame>& frames,
                        const std::vector<double>& h_per_frame,
                        const waveform::WaveformSpec& spec, CorrelatorMode mode);

}  // namespace chaoswpt::receiver
