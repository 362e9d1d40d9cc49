// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#pragma once

#include <string>
#include <vector>

#include "sarbeam/eh_model.hpp"
#include "sarbeam/model.hpp"

namespace sarbeam {

// A candidate design: one beamformer per user plus the power splitting
// ratios. Producer records which scheme generated it.
struct BeamformingSolution {
  std::vector<Eigen::VectorXcd> w;  // K vectors of length Nt, sqrt-watt amplitude
  std::vector<double> rho;          // K splitting ratios, clamped to [1e-6, 1-1e-6]
  std::string producer;

  double total_power() const;
  void clamp_splits();
};

// Everything measurable about a solution against a scenario: per-user SINR
// and harvested DC power, per-constraint SAR, total power, and the achieved
// min ratio t = min_k min(SINR_k/target_k, EH_k/target_k).
struct PerformanceReport {
  std::vector<double> sinr;          // linear
  std::vector<double> harvested_dc;  // W
  std::vector<double> sar;           // W/kg
  double total_power = 0.0;          // W
  double ratio = 0.0;                // achieved t
};

struct ConstraintCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // positive means satisfied with room
  bool ok = false;
};

struct FeasibilityReport {
  std::vector<ConstraintCheck> checks;
  bool feasible = false;
};

// Total received RF power at user k: sum of all beams through h_k plus
// antenna noise.
double received_power(int k, const BeamformingSolution& solution, const ChannelSet& channels,
                      double noise_antenna);

// Decoding-branch SINR at user k, including circuit noise scaled by 1/rho.
double sinr(int k, const BeamformingSolution& solution, const ChannelSet& channels,
            double noise_antenna, double noise_circuit);

// Harvested DC power at user k: the EH curve applied to the (1-rho) branch.
double harvested_power(int k, const BeamformingSolution& solution, const ChannelSet& channels,
                       double noise_antenna, const EhCurve& eh);

// Exposure under SAR constraint l: sum over users of w_k' A_l w_k.
double sar_exposure(int l, const BeamformingSolution& solution,
                    const std::vector<Eigen::MatrixXcd>& sar_matrices);

// Full evaluation against the scenario's targets.
PerformanceReport evaluate(const BeamformingSolution& solution, const SystemScenario& scenario,
                           const ChannelSet& channels, const EhCurve& eh);

// Checks every constraint of the joint design problem at targets scaled by
// `ratio`: SINR >= ratio*target, EH >= ratio*target, SAR limits, split bounds,
// and the power budget. `rel_tol` is relative with a 1e-12 W absolute floor.
FeasibilityReport check_feasibility(const BeamformingSolution& solution,
                                    const SystemScenario& scenario, const ChannelSet& channels,
                                    const EhCurve& eh, double rel_tol = 1e-6,
                                    double ratio = 1.0);

// For fixed beamformers, re-optimizes each rho_k by golden-section search of
// the per-user ratio min(SINR_k/target, EH_k/target) over (0,1). rho_k only
// affects user k, so users decouple.
BeamformingSolution optimize_splits(BeamformingSolution solution, const SystemScenario& scenario,
                                    const ChannelSet& channels, const EhCurve& eh);

}  // namespace sarbeam
