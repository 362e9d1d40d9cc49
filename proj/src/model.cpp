// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#include "sarbeam/model.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "sarbeam/rng.hpp"
#include "sarbeam/units.hpp"

namespace sarbeam {

namespace {
constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr double kReferenceDistance = 1.0;     // m

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}
}  // namespace

void SystemScenario::validate() const {
  if (num_antennas < 1) throw std::invalid_argument("num_antennas must be >= 1");
  if (num_users < 1) throw std::invalid_argument("num_users must be >= 1");
  check_positive(noise_antenna, "noise_antenna");
  check_positive(noise_circuit, "noise_circuit");
  check_positive(power_budget, "power_budget");
  if (static_cast<int>(sinr_targets.size()) != num_users ||
      static_cast<int>(eh_targets.size()) != num_users) {
    throw std::invalid_argument("per-user target lists must have length num_users");
  }
  for (double g : sinr_targets) check_positive(g, "sinr_target");
  for (double l : eh_targets) check_positive(l, "eh_target");
  if (sar_limits.size() != sar_matrices.size()) {
    throw std::invalid_argument("sar_limits and sar_matrices must have equal length");
  }
  for (double p : sar_limits) check_positive(p, "sar_limit");
  for (const auto& a : sar_matrices) {
    if (a.rows() != num_antennas || a.cols() != num_antennas) {
      throw std::invalid_argument("SAR matrix dimension must equal num_antennas");
    }
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw std::invalid_argument("SAR matrix must be Hermitian within 1e-12");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    const double spectral = std::max(std::abs(es.eigenvalues().minCoeff()),
                                     std::abs(es.eigenvalues().maxCoeff()));
    if (es.eigenvalues().minCoeff() < -1e-10 * std::max(1.0, spectral)) {
      throw std::invalid_argument("SAR matrix must be positive semidefinite");
    }
  }
}

void UncertaintyModel::validate(int num_users, int num_sar) const {
  if (static_cast<int>(channel_bound_sq.size()) != num_users) {
    throw std::invalid_argument("channel_bound_sq must have length num_users");
  }
  if (static_cast<int>(sar_fro_bound.size()) != num_sar) {
    throw std::invalid_argument("sar_fro_bound must have length of the SAR list");
  }
  for (double b : channel_bound_sq) {
    if (b < 0.0) throw std::invalid_argument("channel bounds must be nonnegative");
  }
  for (double b : sar_fro_bound) {
    if (b < 0.0) throw std::invalid_argument("SAR bounds must be nonnegative");
  }
}

double UncertaintyModel::channel_radius(int k) const { return std::sqrt(channel_bound_sq.at(k)); }

Eigen::VectorXcd los_steering(double angle_rad, int num_antennas) {
  Eigen::VectorXcd v(num_antennas);
  const double phase_step = -M_PI * std::sin(angle_rad);
  for (int m = 0; m < num_antennas; ++m) {
    v(m) = std::polar(1.0, phase_step * m);
  }
  return v;
}

double friis_path_loss(double distance_m, double frequency_hz, double gain_tx_dbi,
                       double gain_rx_dbi, double exponent) {
  if (distance_m < kReferenceDistance) {
    throw std::domain_error("path-loss model is not calibrated below the 1 m reference");
  }
  if (!(frequency_hz > 0.0)) throw std::domain_error("frequency must be positive");
  const double wavelength = kSpeedOfLight / frequency_hz;
  const double reference = std::pow(wavelength / (4.0 * M_PI * kReferenceDistance), 2.0);
  return dbi_to_linear(gain_tx_dbi) * dbi_to_linear(gain_rx_dbi) * reference *
         std::pow(kReferenceDistance / distance_m, exponent);
}

ChannelSet generate_channels(const SystemScenario& scenario, const ChannelModel& model,
                             std::uint64_t seed) {
  Rng rng(seed);
  const int nt = scenario.num_antennas;
  const int k_users = scenario.num_users;

  ChannelSet out;
  out.h.resize(k_users);
  out.meta.resize(k_users);

  double los_weight = 1.0;
  double nlos_weight = 0.0;
  if (std::isfinite(model.rician_factor_db)) {
    const double r = db_to_linear(model.rician_factor_db);
    los_weight = std::sqrt(r / (1.0 + r));
    nlos_weight = std::sqrt(1.0 / (1.0 + r));
  }

  for (int k = 0; k < k_users; ++k) {
    ChannelMeta meta;
    meta.distance_m = rng.uniform(model.distance_min_m, model.distance_max_m);
    meta.angle_rad = rng.uniform(-M_PI, M_PI);
    meta.path_loss = friis_path_loss(meta.distance_m, model.frequency_hz, model.gain_tx_dbi,
                                     model.gain_rx_dbi, model.path_loss_exponent);

    Eigen::VectorXcd los = std::sqrt(meta.path_loss) * los_steering(meta.angle_rad, nt);
    Eigen::VectorXcd nlos(nt);
    for (int m = 0; m < nt; ++m) nlos(m) = rng.cgauss(meta.path_loss);

    out.h[k] = los_weight * los + nlos_weight * nlos;
    out.meta[k] = meta;
  }
  return out;
}

Eigen::MatrixXcd default_sar_matrix() {
  using namespace std::complex_literals;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
  for (int i = 0; i < 4; ++i) a(i, i) = 1.6;
  for (int i = 0; i + 1 < 4; ++i) a(i, i + 1) = -1.2i;
  for (int i = 0; i + 2 < 4; ++i) a(i, i + 2) = -0.42;
  // lower triangle by conjugate symmetry
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) a(i, j) = std::conj(a(j, i));
  }
  return a;
}

SystemScenario default_scenario() {
  SystemScenario s;
  s.num_antennas = 4;
  s.num_users = 4;
  s.noise_antenna = dbm_to_watts(-70.0);
  s.noise_circuit = dbm_to_watts(-50.0);
  s.power_budget = 2.0;
  s.sar_limits = {1.6};
  s.sar_matrices = {default_sar_matrix()};
  s.sinr_targets.assign(4, db_to_linear(10.0));
  s.eh_targets.assign(4, dbm_to_watts(-15.0));
  return s;
}

}  // namespace sarbeam
