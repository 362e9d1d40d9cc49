// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#pragma once

#include <stdexcept>

namespace sarbeam {

// Raised when a requested DC output is at or above the rectifier's saturation
// level, i.e. unreachable at any input power. Max-min searches must treat this
// as "infeasible at this ratio", not as a hard failure.
class SaturationExceeded : public std::domain_error {
 public:
  SaturationExceeded(double target_w, double limit_w);
  double target_w;
  double limit_w;
};

// Strictly increasing, bounded RF-to-DC transfer curve with a closed-form or
// numeric inverse. Any curve with these properties can drive the optimizers.
class EhCurve {
 public:
  virtual ~EhCurve() = default;

  // DC output power [W] for RF input power x [W]; throws std::domain_error for x < 0.
  virtual double forward(double input_rf_w) const = 0;

  // RF input power [W] producing DC output y [W]; throws SaturationExceeded
  // for y >= saturation(), std::domain_error for y < 0.
  virtual double inverse(double output_dc_w) const = 0;

  // Least upper bound of forward() — the saturation level [W].
  virtual double saturation() const = 0;
};

// Rational saturating rectifier curve F(x) = (a x + b)/(x + c) - b/c.
// Defaults are fitted values for a measured rectifier at 915 MHz.
class RationalEhModel final : public EhCurve {
 public:
  RationalEhModel() = default;
  RationalEhModel(double a, double b, double c);

  double forward(double input_rf_w) const override;
  double inverse(double output_dc_w) const override;
  double saturation() const override { return a_ - b_ / c_; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

 private:
  double a_ = 2.463;
  double b_ = 1.635;
  double c_ = 0.826;
};

}  // namespace sarbeam
