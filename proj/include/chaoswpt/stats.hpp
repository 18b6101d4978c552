#pragma once

#include <cstdint>

namespace chaoswpt {

/// Inverse standard normal CDF (Acklam's rational approximation with one
/// Halley refinement; relative error < 1e-13 over (0,1)).
double inverse_normal_cdf(double p);

/// Kahan-compensated accumulator. Used wherever a long sum of same-sign
/// fourth-power terms would otherwise lose low-order bits.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

/// Streaming mean/variance (Welford) with an order-dependent merge (Chan).
/// Merging chunk results in a fixed index order makes the final estimate
/// independent of how many workers produced the chunks.
struct RunningMoments {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v);
  void merge(const RunningMoments& other);
  double variance() const;   // sample variance, n >= 2
  double std_error() const;  // sqrt(variance / n)
};

}  // namespace chaoswpt
