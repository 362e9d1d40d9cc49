// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#include "sarbeam/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sarbeam {

namespace {
constexpr double kSplitFloor = 1e-6;

double norm2(const Eigen::VectorXcd& v) { return v.squaredNorm(); }
}  // namespace

double BeamformingSolution::total_power() const {
  double p = 0.0;
  for (const auto& wk : w) p += norm2(wk);
  return p;
}

void BeamformingSolution::clamp_splits() {
  for (double& r : rho) r = std::clamp(r, kSplitFloor, 1.0 - kSplitFloor);
}

double received_power(int k, const BeamformingSolution& solution, const ChannelSet& channels,
                      double noise_antenna) {
  const Eigen::VectorXcd& hk = channels.h.at(k);
  double p = noise_antenna;
  for (const auto& wj : solution.w) p += std::norm(hk.dot(wj));
  return p;
}

double sinr(int k, const BeamformingSolution& solution, const ChannelSet& channels,
            double noise_antenna, double noise_circuit) {
  const Eigen::VectorXcd& hk = channels.h.at(k);
  const double rho = solution.rho.at(k);
  double interference = 0.0;
  for (int j = 0; j < static_cast<int>(solution.w.size()); ++j) {
    if (j != k) interference += std::norm(hk.dot(solution.w[j]));
  }
  const double signal = std::norm(hk.dot(solution.w[k]));
  return rho * signal / (rho * (noise_antenna + interference) + noise_circuit);
}

double harvested_power(int k, const BeamformingSolution& solution, const ChannelSet& channels,
                       double noise_antenna, const EhCurve& eh) {
  const double rho = solution.rho.at(k);
  return eh.forward((1.0 - rho) * received_power(k, solution, channels, noise_antenna));
}

double sar_exposure(int l, const BeamformingSolution& solution,
                    const std::vector<Eigen::MatrixXcd>& sar_matrices) {
  const Eigen::MatrixXcd& a = sar_matrices.at(l);
  double s = 0.0;
  for (const auto& wk : solution.w) s += std::real(wk.dot(a * wk));
  return s;
}

PerformanceReport evaluate(const BeamformingSolution& solution, const SystemScenario& scenario,
                           const ChannelSet& channels, const EhCurve& eh) {
  PerformanceReport r;
  const int k_users = scenario.num_users;
  r.sinr.resize(k_users);
  r.harvested_dc.resize(k_users);
  r.ratio = std::numeric_limits<double>::infinity();
  for (int k = 0; k < k_users; ++k) {
    r.sinr[k] = sinr(k, solution, channels, scenario.noise_antenna, scenario.noise_circuit);
    r.harvested_dc[k] =
        harvested_power(k, solution, channels, scenario.noise_antenna, eh);
    r.ratio = std::min({r.ratio, r.sinr[k] / scenario.sinr_targets[k],
                        r.harvested_dc[k] / scenario.eh_targets[k]});
  }
  const int n_sar = static_cast<int>(scenario.sar_limits.size());
  r.sar.resize(n_sar);
  for (int l = 0; l < n_sar; ++l) r.sar[l] = sar_exposure(l, solution, scenario.sar_matrices);
  r.total_power = solution.total_power();
  return r;
}

FeasibilityReport check_feasibility(const BeamformingSolution& solution,
                                    const SystemScenario& scenario, const ChannelSet& channels,
                                    const EhCurve& eh, double rel_tol, double ratio) {
  FeasibilityReport report;
  report.feasible = true;
  constexpr double kAbsFloor = 1e-12;

  auto push = [&](const std::string& name, double value, double bound, bool is_lower) {
    ConstraintCheck c;
    c.name = name;
    c.value = value;
    c.bound = bound;
    const double tol = rel_tol * std::max(std::abs(bound), kAbsFloor) + kAbsFloor;
    c.slack = is_lower ? value - bound : bound - value;
    c.ok = c.slack >= -tol;
    report.feasible = report.feasible && c.ok;
    report.checks.push_back(c);
  };

  const PerformanceReport perf = evaluate(solution, scenario, channels, eh);
  for (int k = 0; k < scenario.num_users; ++k) {
    push("sinr_user_" + std::to_string(k), perf.sinr[k], ratio * scenario.sinr_targets[k], true);
    push("eh_user_" + std::to_string(k), perf.harvested_dc[k], ratio * scenario.eh_targets[k],
         true);
    push("rho_lo_user_" + std::to_string(k), solution.rho[k], kSplitFloor, true);
    push("rho_hi_user_" + std::to_string(k), solution.rho[k], 1.0 - kSplitFloor, false);
  }
  for (size_t l = 0; l < scenario.sar_limits.size(); ++l) {
    push("sar_" + std::to_string(l), perf.sar[l], scenario.sar_limits[l], false);
  }
  push("total_power", perf.total_power, scenario.power_budget, false);
  return report;
}

BeamformingSolution optimize_splits(BeamformingSolution solution, const SystemScenario& scenario,
                                    const ChannelSet& channels, const EhCurve& eh) {
  const double lo = kSplitFloor;
  const double hi = 1.0 - kSplitFloor;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  for (int k = 0; k < scenario.num_users; ++k) {
    const double received = received_power(k, solution, channels, scenario.noise_antenna);
    const Eigen::VectorXcd& hk = channels.h[k];
    double interference = 0.0;
    for (int j = 0; j < scenario.num_users; ++j) {
      if (j != k) interference += std::norm(hk.dot(solution.w[j]));
    }
    const double signal = std::norm(hk.dot(solution.w[k]));

    auto user_ratio = [&](double rho) {
      const double g = rho * signal /
                       (rho * (scenario.noise_antenna + interference) + scenario.noise_circuit);
      const double e = eh.forward((1.0 - rho) * received);
      return std::min(g / scenario.sinr_targets[k], e / scenario.eh_targets[k]);
    };

    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = user_ratio(c), fd = user_ratio(d);
    for (int it = 0; it < 90; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = user_ratio(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = user_ratio(d);
      }
    }
    const double mid = 0.5 * (a + b);
    if (user_ratio(mid) > user_ratio(solution.rho[k])) solution.rho[k] = mid;
  }
  solution.clamp_splits();
  return solution;
}

}  // namespace sarbeam
