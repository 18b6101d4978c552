#pragma once

#include <cstdint>
#include <random>

namespace chaoswpt {

/// Default base seed for every stochastic entry point that is not given one.
inline constexpr std::uint64_t kDefaultSeed = 0x5EEDBA5EULL;

/// One SplitMix64 step. Advances `state` and returns the next output word.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives a child seed from a base seed and a salt (chunk index, sweep
/// index, ...). Deterministic and part of the reproducibility contract:
/// changing this function changes every published estimate.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

/// Seeded random stream. All variate transforms are implemented here rather
/// than with std:: distributions, whose output sequences are
/// implementation-defined; this keeps runs reproducible per seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01();

  /// Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform_open01();

  /// Standard normal via Box-Muller (no cached second value, so the
  /// draw count per call is fixed at two uniforms).
  double normal();

  /// Gamma(shape, scale 1) via Marsaglia-Tsang squeeze; requires shape >= 1.
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
};

}  // namespace chaoswpt
