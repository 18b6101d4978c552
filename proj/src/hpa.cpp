#include "chaoswpt/hpa.hpp"

#include <stdexcept>

namespace chaoswpt::analysis {

void HpaModel::validate() const {
  if (kind == HpaKind::Ideal) return;
  if (!(smoothness > 0.0)) {
    throw std::invalid_argument("Rapp smoothness must be > 0");
  }
  if (!(saturation_amplitude > 0.0)) {
    throw std::invalid_argument("Rapp saturation amplitude must be > 0");
  }
}

double hpa_apply(double sample, const HpaModel& model) {
  model.validate();
  if (model.kind == HpaKind::Ideal) return sample;
  const double ratio = std::fabs(sample) / model.saturation_amplitude;
  const double two_p = 2.0 * model.smoothness;
  return sample / std::pow(1.0 + std::pow(ratio, two_p), 1.0 / two_p);
}

double hpa_delivered_power(double p_t_watts, const HpaModel& model) {
  if (!(p_t_watts > 0.0)) {
    throw std::invalid_argument("P_t must be > 0");
  }
  const double a = hpa_apply(std::sqrt(p_t_watts), model);
  return a * a;
}

}  // namespace chaoswpt::analysis
