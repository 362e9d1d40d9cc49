// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#pragma once

#include <cmath>

namespace sarbeam {

// All internal quantities are linear (watts, ratios). dB/dBm conversions
// happen only at configuration and reporting boundaries.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

inline double dbi_to_linear(double dbi) { return std::pow(10.0, dbi / 10.0); }

}  // namespace sarbeam
