// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#include "sarbeam/eh_model.hpp"

#include <string>

namespace sarbeam {

SaturationExceeded::SaturationExceeded(double target, double limit)
    : std::domain_error("EH target " + std::to_string(target) +
                        " W is at or above the rectifier saturation level " +
                        std::to_string(limit) + " W"),
      target_w(target),
      limit_w(limit) {}

RationalEhModel::RationalEhModel(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (c_ <= 0.0) throw std::invalid_argument("EH model requires c > 0");
  // a <= b/c would make the curve non-positive everywhere
  if (a_ <= b_ / c_) throw std::invalid_argument("EH model requires a > b/c");
}

double RationalEhModel::forward(double x) const {
  if (x < 0.0) throw std::domain_error("EH input power must be nonnegative");
  return (a_ * x + b_) / (x + c_) - b_ / c_;
}

double RationalEhModel::inverse(double y) const {
  if (y < 0.0) throw std::domain_error("EH output power must be nonnegative");
  const double sat = saturation();
  if (y >= sat) throw SaturationExceeded(y, sat);
  return c_ * y / (sat - y);
}

}  // namespace sarbeam
