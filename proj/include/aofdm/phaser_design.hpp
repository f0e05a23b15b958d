// aofdm: analog and digital OFDM baseband simulation library
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <vector>

#include "aofdm/phaser.hpp"

namespace aofdm {

/// Transmitter window placement: output block starting at t = 0
/// (phi1 = -T0/2) or phase-aligned on [T0/2, 3T0/2] (phi1 = -T0).
enum class Phi1Case { ZeroStart, PhaseAligned };

enum class Phi2Sign { Plus, Minus };

struct OfdmProfile {
    int n = 1;                                  // subcarrier count, >= 1
    double ts = 1.0;                            // symbol period, seconds
    Phi1Case phi1_case = Phi1Case::PhaseAligned;
    Phi2Sign phi2_sign = Phi2Sign::Plus;

    double block_duration() const { return static_cast<double>(n) * ts; }
};

struct FeasibilityReport {
    double phi2_magnitude = 0.0;  // s^2/rad
    double delay_swing = 0.0;     // seconds over the stated bandwidth
    double center_delay = 0.0;    // seconds, -phi1
    bool practical = false;
    std::string notes;
};

/// Realizability thresholds.  Typical linear-chirp phasers reach group
/// delay dispersions of order 1-100 ns^2/rad and center delays of tens of
/// nanoseconds; both bounds are configurable.
inline constexpr double kDefaultPhi2PracticalMax = 1e-16;      // s^2/rad
inline constexpr double kDefaultCenterDelayMax = 1e-7;         // s

/// Default upconversion frequency used when a profile does not pin one:
/// 2*pi*10/T0.  Ideal up/downconversion makes the exact value immaterial;
/// it is recorded in emitted configs.
double default_omega_c(const OfdmProfile& profile);

/// Transmitter phaser: |phi2| = N Ts^2 / (2 pi) with the requested sign,
/// phi1 = -T0/2 (ZeroStart) or -T0 (PhaseAligned), phi0 = 0.  Causality
/// (phi1 <= -T0/2) holds by construction.
PhaserParams tx_params(const OfdmProfile& profile);
PhaserParams tx_params(const OfdmProfile& profile, double omega_c);

/// Receiver phaser paired with a transmitter: inverse group delay
/// dispersion phi2 -> -phi2 and zero group delay parameter.
PhaserParams rx_params(const PhaserParams& tx);

FeasibilityReport feasibility(const OfdmProfile& profile, double bandwidth_hz,
                              double phi2_practical_max = kDefaultPhi2PracticalMax,
                              double center_delay_max = kDefaultCenterDelayMax);

/// Frequency bands with typical symbol-period bounds for commercial OFDM
/// deployments; used by the design CLI.
struct BandPreset {
    std::string name;
    double carrier_hz;
    double ts_max;  // seconds
    std::string description;
};

const std::vector<BandPreset>& band_presets();
const BandPreset* find_band_preset(const std::string& name);

}  // namespace aofdm
