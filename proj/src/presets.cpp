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

#include "aofdm/presets.hpp"

#include <sstream>

namespace aofdm::scenario {

const std::vector<Preset>& presets() {
    static const std::vector<Preset> list = {
        {"fig1_subcarriers", "1",
         "four windowed subcarriers of an N=4 block, waveforms and sinc spectra",
         R"({
  "name": "fig1_subcarriers",
  "task": "subcarriers",
  "system": "conventional_fft",
  "n": 4,
  "ts_s": 1e-6,
  "oversampling": 64,
  "symbols": {"kind": "explicit", "blocks": [[1, 1, 1, 1]]}
})"},
        {"fig3_rtft_waveform", "3",
         "dispersive OFDM block waveform, N=64, symbols {1,1,1,1,0,...}; both "
         "window placements (an alternate {1,1,1,0,...} loading runs via an "
         "explicit symbol list)",
         R"({
  "name": "fig3_rtft_waveform",
  "task": "rtft_waveform",
  "system": "rtft_ideal",
  "n": 64,
  "ts_s": 1e-6,
  "oversampling": 16,
  "symbols": {"kind": "explicit", "blocks": [[1, 1, 1, 1]]}
})"},
        {"fig4_idft_vs_rtft", "4",
         "IDFT-modem samples against dispersive-modem samples, normalized, "
         "including the half-block shift overlay",
         R"({
  "name": "fig4_idft_vs_rtft",
  "task": "idft_vs_rtft",
  "system": "rtft_ideal",
  "n": 64,
  "ts_s": 1e-6,
  "symbols": {"kind": "explicit", "blocks": [[1, 1, 1, 1]]}
})"},
        {"fig5_recovery", "5",
         "end-to-end dispersive transceiver over an ideal channel, random "
         "QPSK block, recovered symbols and errors",
         R"({
  "name": "fig5_recovery",
  "task": "transceive",
  "system": "rtft_ideal",
  "n": 64,
  "ts_s": 1e-6,
  "phi1_case": "phase_aligned",
  "prefix": {"kind": "none"},
  "channel": {"kind": "ideal"},
  "symbols": {"kind": "qpsk", "blocks": 1, "seed": 1}
})"},
        {"fig7_zp_multipath", "7",
         "two dispersive OFDM blocks through a seeded 10-tap Rician channel, "
         "with and without a zero-padding guard of length 10",
         R"({
  "name": "fig7_zp_multipath",
  "task": "prefix_compare",
  "system": "rtft_ideal",
  "n": 64,
  "ts_s": 1e-6,
  "oversampling": 16,
  "prefix": {"kind": "zp", "length": 10},
  "channel": {"kind": "rician", "s": 1.0, "sigma": 0.4, "taps": 10, "seed": 7},
  "symbols": {"kind": "explicit", "blocks": [[1, 0, 1, 0], [1, 1, 1, 1]]},
  "emit_isi_table": true
})"},
        {"fig9_cp_conventional", "9",
         "two IDFT-modem blocks through a seeded 10-tap Rician channel, with "
         "and without a cyclic prefix of length 10",
         R"({
  "name": "fig9_cp_conventional",
  "task": "prefix_compare",
  "system": "conventional_fft",
  "n": 64,
  "ts_s": 1e-6,
  "oversampling": 16,
  "prefix": {"kind": "cp", "length": 10},
  "channel": {"kind": "rician", "s": 1.0, "sigma": 0.4, "taps": 10, "seed": 9},
  "symbols": {"kind": "explicit", "blocks": [[1, 0, 1, 0], [1, 1, 1, 1]]}
})"},
        {"fig12_group_delay", "12",
         "linear group-delay line of the designed phaser pair over the "
         "occupied band, with the feasibility report",
         R"({
  "name": "fig12_group_delay",
  "task": "group_delay",
  "system": "rtft_ideal",
  "n": 64,
  "ts_s": 1e-9,
  "bandwidth_hz": 1e9,
  "symbols": {"kind": "explicit", "blocks": [[1]]}
})"},
    };
    return list;
}

const Preset* find_preset(const std::string& name) {
    for (const Preset& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

std::string presets_table() {
    std::ostringstream out;
    out << "available presets (run with: aofdm run <name>):\n";
    for (const Preset& p : presets()) {
        out << "  " << p.name;
        for (std::size_t i = p.name.size(); i < 22; ++i) out << ' ';
        out << "figure " << p.figure;
        for (std::size_t i = p.figure.size(); i < 4; ++i) out << ' ';
        out << p.description << '\n';
    }
    return out.str();
}

}  // namespace aofdm::scenario
