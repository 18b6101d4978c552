#include "chaoswpt/chaos.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace chaoswpt::chaos {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kBoundaryTol = 1e-12;
}  // namespace

void ChaosConfig::validate() const {
  if (degree < 2) {
    throw std::invalid_argument("chaos degree must be >= 2");
  }
}

double chebyshev_next(double x, int degree) {
  if (degree < 2) {
    throw std::invalid_argument("chaos degree must be >= 2");
  }
  double ax = std::fabs(x);
  if (ax > 1.0) {
    if (ax > 1.0 + kBoundaryTol) {
      throw std::domain_error("chebyshev_next input outside [-1, 1]");
    }
    x = std::copysign(1.0, x);
  }
  return std::cos(static_cast<double>(degree) * std::acos(x));
}

double invariant_from_uniform(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("invariant_from_uniform requires u in (0,1)");
  }
  double x = std::cos(kPi * u);
  if (x >= 1.0) return std::nextafter(1.0, 0.0);
  if (x <= -1.0) return std::nextafter(-1.0, 0.0);
  return x;
}

double sample_invariant(Rng& rng) {
  return invariant_from_uniform(rng.uniform_open01());
}

void generate_reference(int length, const ChaosConfig& config, Rng& rng,
                        ChipSequence& out) {
  if (length < 1) {
    throw std::invalid_argument("reference length must be >= 1");
  }
  config.validate();
  out.resize(static_cast<std::size_t>(length));
  if (config.mode == TrajectoryMode::IidInvariant) {
    for (auto& chip : out) chip = sample_invariant(rng);
    return;
  }

  // Exact conjugate form of the map: with x = cos(2*pi*u), one Chebyshev step
  // is u -> frac(degree * u). Each step consumes ceil(log2(degree)) bits of
  // the angle, so the fraction is kept in enough 64-bit words that the last
  // chip still sees a full double mantissa. (A plain cos(degree*arccos(x))
  // loop loses 2 bits per step and its chip density collapses mid-frame once
  // the mantissa runs out, near step 26 for degree 4.)
  const int bits_per_step = std::bit_width(static_cast<unsigned>(config.degree) - 1u);
  const int total_bits = bits_per_step * (length - 1) + 64;
  const int words = (total_bits + 63) / 64;
  static thread_local std::vector<std::uint64_t> frac;
  frac.resize(static_cast<std::size_t>(words));
  for (auto& w : frac) w = rng.next_u64();
  const auto degree = static_cast<unsigned __int128>(config.degree);
  for (int k = 0; k < length; ++k) {
    if (k > 0) {
      unsigned __int128 carry = 0;
      for (int w = words - 1; w >= 0; --w) {
        const unsigned __int128 prod =
            static_cast<unsigned __int128>(frac[static_cast<std::size_t>(w)]) *
                degree +
            carry;
        frac[static_cast<std::size_t>(w)] = static_cast<std::uint64_t>(prod);
        carry = prod >> 64;
      }
    }
    const double u = static_cast<double>(frac[0] >> 11) * 0x1.0p-53;
    out[static_cast<std::size_t>(k)] = std::cos(2.0 * kPi * u);
  }
}

ChipSequence generate_reference(int length, const ChaosConfig& config, Rng& rng) {
  ChipSequence out;
  generate_reference(length, config, rng, out);
  return out;
}

int random_bit(Rng& rng) {
  return (rng.next_u64() >> 63) ? 1 : -1;
}

}  // namespace chaoswpt::chaos
