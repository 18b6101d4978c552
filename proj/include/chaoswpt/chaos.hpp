#pragma once

#include <vector>

#include "chaoswpt/rng.hpp"

namespace chaoswpt::chaos {

/// Chip values produced by the chaotic generator; every element lies in
/// [-1, 1] and follows the arcsine invariant law 1/(pi*sqrt(1-x^2)).
using ChipSequence = std::vector<double>;

/// How the chips of one symbol are produced.
///  - PerSymbolTrajectory: a fresh random starting angle per symbol, then the
///    exact Chebyshev dynamics x_k = cos(2*pi*u_k), u_{k+1} = frac(degree*u_k),
///    with u kept in multi-word fixed point. Iterating cos(degree*arccos(x))
///    in doubles instead would exhaust the 53-bit mantissa after
///    ~log_degree(2^53) steps and skew the chip density mid-frame.
///  - IidInvariant: every chip drawn independently from the invariant law.
///    Exists as a cross-check oracle: all cross-chip moments vanish by
///    construction, so estimates must agree with trajectory mode.
enum class TrajectoryMode { PerSymbolTrajectory, IidInvariant };

struct ChaosConfig {
  // The harvested-DC closed forms assume every second- and fourth-order
  // cross moment of distinct chips vanishes. Along one trajectory that is a
  // property of the map degree: degree 2 has E{x_k^2 x_{k+1} x_{k+2}} = 1/8
  // and degree 3 has E{x_k^3 x_{k+1}} = 1/8, each inflating E{(sum x)^4} well
  // beyond tolerance; degree 4 is the smallest degree for which every
  // required cross moment is exactly zero.
  int degree = 4;
  TrajectoryMode mode = TrajectoryMode::PerSymbolTrajectory;

  void validate() const;  // degree >= 2
};

/// One step of the Chebyshev map: cos(degree * arccos(x)).
/// Inputs within 1e-12 of the [-1, 1] boundary are snapped to it; anything
/// farther out is a domain error (silently clamping real excursions would
/// mask generator bugs).
double chebyshev_next(double x, int degree);

/// Maps a uniform u in (0,1) to an invariant-law sample cos(pi*u).
/// cos rounds to exactly +/-1.0 for u within ~3e-9 of the ends; a one-ulp
/// nudge preserves the open interval (-1, 1) and avoids the map's sticky
/// fixed point at 1.
double invariant_from_uniform(double u);

/// Draws one sample from the arcsine invariant distribution.
double sample_invariant(Rng& rng);

/// Fills `out` with `length` chips per the config (resizes as needed).
void generate_reference(int length, const ChaosConfig& config, Rng& rng,
                        ChipSequence& out);

ChipSequence generate_reference(int length, const ChaosConfig& config, Rng& rng);

/// Equiprobable +1 / -1 modulation bit.
int random_bit(Rng& rng);

}  // namespace chaoswpt::chaos
