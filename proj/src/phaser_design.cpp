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

#include "aofdm/phaser_design.hpp"

#include <sstream>

namespace aofdm {

double default_omega_c(const OfdmProfile& profile) {
    return kTwoPi * 10.0 / profile.block_duration();
}

PhaserParams tx_params(const OfdmProfile& profile) {
    return tx_params(profile, default_omega_c(profile));
}

PhaserParams tx_params(const OfdmProfile& profile, double omega_c) {
    require(profile.n >= 1, "tx_params: N must be >= 1");
    require(profile.ts > 0.0, "tx_params: Ts must be positive");
    const double t0 = profile.block_duration();
    PhaserParams p;
    p.phi0 = 0.0;
    p.phi2 = static_cast<double>(profile.n) * profile.ts * profile.ts / kTwoPi;
    if (profile.phi2_sign == Phi2Sign::Minus) p.phi2 = -p.phi2;
    p.phi1 = profile.phi1_case == Phi1Case::ZeroStart ? -t0 / 2.0 : -t0;
    p.omega_c = omega_c;
    return p;
}

PhaserParams rx_params(const PhaserParams& tx) {
    PhaserParams p = tx;
    p.phi1 = 0.0;
    p.phi2 = -tx.phi2;
    return p;
}

FeasibilityReport feasibility(const OfdmProfile& profile, double bandwidth_hz,
                              double phi2_practical_max, double center_delay_max) {
    require(bandwidth_hz > 0.0, "feasibility: bandwidth must be positive");
    const PhaserParams tx = tx_params(profile);
    FeasibilityReport r;
    r.phi2_magnitude = std::abs(tx.phi2);
    r.delay_swing = r.phi2_magnitude * kTwoPi * bandwidth_hz;
    r.center_delay = -tx.phi1;
    const bool phi2_ok = r.phi2_magnitude <= phi2_practical_max;
    const bool delay_ok = r.center_delay <= center_delay_max;
    r.practical = phi2_ok && delay_ok;

    std::ostringstream notes;
    if (!phi2_ok)
        notes << "|phi2| exceeds the practical dispersion bound of "
              << phi2_practical_max << " s^2/rad. ";
    if (!delay_ok)
        notes << "center delay -phi1 = " << r.center_delay
              << " s exceeds the realizable group-delay bound of "
              << center_delay_max << " s. ";
    if (profile.phi1_case == Phi1Case::PhaseAligned && r.center_delay > center_delay_max)
        notes << "Note: the phase-aligned case needs phi1 = -N*Ts, which grows "
                 "with N*Ts and conflicts with nanosecond-scale group delays "
                 "for large blocks; shrink Ts or N, or accept the zero-start "
                 "case plus per-symbol compensation. ";
    if (r.practical) notes << "Within typical linear-chirp phaser capability.";
    r.notes = notes.str();
    return r;
}

const std::vector<BandPreset>& band_presets() {
    static const std::vector<BandPreset> presets = {
        {"sub6", 5.0e9, 1e-9,
         "sub-6 GHz; large dispersion values are hard to realize here"},
        {"28ghz", 28.0e9, 1e-9, "5G microwave band around 28 GHz (Ts < 1 ns)"},
        {"60ghz", 60.0e9, 0.5e-9,
         "6G millimeter-wave band around 60 GHz (Ts < 0.5 ns)"},
        {"thz", 300.0e9, 0.02e-9,
         "THz band, 252-325 GHz (Ts < 0.02 ns)"},
    };
    return presets;
}

const BandPreset* find_band_preset(const std::string& name) {
    for (const BandPreset& b : band_presets())
        if (b.name == name) return &b;
    return nullptr;
}

}  // namespace aofdm
