// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace sarbeam {

// Full description of one problem instance: transmitter, receivers, noise,
// exposure limits and quality targets. All powers in watts, all ratios linear.
// Immutable after construction; safe to share across parallel workers.
struct SystemScenario {
  int num_antennas = 4;
  int num_users = 4;
  double noise_antenna = 1e-10;   // W, per-antenna thermal noise
  double noise_circuit = 1e-8;    // W, baseband conversion noise
  double power_budget = 2.0;      // W, total transmit power cap
  std::vector<double> sar_limits;              // W/kg, length L
  std::vector<Eigen::MatrixXcd> sar_matrices;  // Hermitian PSD, Nt x Nt, length L
  std::vector<double> sinr_targets;            // linear, length K
  std::vector<double> eh_targets;              // W (DC side), length K

  // Throws std::invalid_argument on any violated invariant: positive powers
  // and targets, matching lengths, Hermitian PSD SAR matrices.
  void validate() const;
};

// Large-scale channel model parameters; simulation defaults for a short-range
// 915 MHz link with a half-wavelength uniform linear array.
struct ChannelModel {
  double frequency_hz = 915e6;
  double gain_tx_dbi = 8.0;
  double gain_rx_dbi = 3.0;
  double path_loss_exponent = 2.5;
  double rician_factor_db = 5.0;  // +inf selects the pure line-of-sight channel
  double distance_min_m = 1.0;
  double distance_max_m = 5.0;
};

struct ChannelMeta {
  double distance_m = 0.0;
  double angle_rad = 0.0;
  double path_loss = 0.0;  // linear power gain
};

// Per-user complex channel vectors plus the draw metadata that produced them.
struct ChannelSet {
  std::vector<Eigen::VectorXcd> h;  // K vectors of length Nt, linear amplitude gain
  std::vector<ChannelMeta> meta;
};

// Bounded uncertainty sets for robust design. Channel errors live in the ball
// ‖Δh_k‖² ≤ channel_bound_sq[k]; SAR matrix errors in ‖ΔA_l‖_F ≤ sar_fro_bound[l].
struct UncertaintyModel {
  std::vector<double> channel_bound_sq;  // length K
  std::vector<double> sar_fro_bound;     // length L

  void validate(int num_users, int num_sar) const;
  double channel_radius(int k) const;  // = sqrt(channel_bound_sq[k])
};

// Far-field ULA steering vector with half-wavelength spacing: entry m equals
// exp(-i m pi sin(angle)). Unit-modulus entries, total function.
Eigen::VectorXcd los_steering(double angle_rad, int num_antennas);

// Free-space reference loss at 1 m with power-law rolloff beyond it, as a
// linear power gain. Throws std::domain_error for distances below 1 m (the
// model is not calibrated there).
double friis_path_loss(double distance_m, double frequency_hz, double gain_tx_dbi,
                       double gain_rx_dbi, double exponent);

// Draws one block-fading realization: distances U(min,max), angles U(-pi,pi),
// h_k = sqrt(R/(1+R)) h_LOS + sqrt(1/(1+R)) h_NLOS with per-entry NLOS
// variance equal to the path loss. Deterministic for a fixed seed.
ChannelSet generate_channels(const SystemScenario& scenario, const ChannelModel& model,
                             std::uint64_t seed);

// The built-in 4x4 SAR matrix (W/kg entries). Stored as the Hermitian
// normalization of the published table: -1.2i on the first superdiagonal,
// -0.42 on the second, lower triangle by conjugate symmetry.
Eigen::MatrixXcd default_sar_matrix();

// K = Nt = 4 reference scenario: -70 dBm antenna noise, -50 dBm circuit noise,
// 2 W budget, 10 dB SINR targets, -15 dBm EH targets, one SAR constraint at
// 1.6 W/kg with the built-in matrix.
SystemScenario default_scenario();

}  // namespace sarbeam
