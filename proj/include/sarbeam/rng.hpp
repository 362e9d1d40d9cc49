// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace sarbeam {

// Deterministic random stream. std::mt19937_64 has a bit-stable output
// sequence, but the standard distributions do not, so uniform/normal draws
// are derived here directly from the raw 64-bit stream. Identical seeds give
// bit-identical draws on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1) with 53-bit resolution
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller; one spare value cached per pair
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // circularly symmetric complex Gaussian with E|z|^2 = variance
  std::complex<double> cgauss(double variance) {
    double s = std::sqrt(variance / 2.0);
    return {s * normal(), s * normal()};
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 finalizer; decorrelates seed streams for parallel trials
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sarbeam
