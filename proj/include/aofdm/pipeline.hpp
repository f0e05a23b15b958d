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

#include <optional>

#include "aofdm/channel.hpp"
#include "aofdm/ofdm.hpp"
#include "aofdm/phaser_design.hpp"
#include "aofdm/prefix.hpp"
#include "aofdm/rtft.hpp"

namespace aofdm {

/// Which transmit/receive chain realizes the block transform: the digital
/// IDFT/DFT modem, the ideal dispersive transform evaluated in closed form,
/// or the sampled microwave chain (mixer, time lenses, phaser convolution).
enum class SystemKind { ConventionalFft, RtftIdeal, RtftPhysical };

struct PrefixSpec {
    bool enabled = false;
    PrefixKind kind = PrefixKind::Zp;
    std::size_t length = 0;
};

struct PipelineConfig {
    SystemKind kind = SystemKind::ConventionalFft;
    OfdmProfile profile;
    PrefixSpec prefix;
    int oversampling = 16;         // sampled physical chain only
    double omega_c = 0.0;          // 0 selects the profile default
    double equalizer_floor = 1e-12;
    // The zero-start window leaves an alternating sign on the recovered
    // symbols; the receiver removes it unless disabled (test hook).
    bool compensate_zero_start = true;

    std::size_t block_stride() const {
        return static_cast<std::size_t>(profile.n) +
               (prefix.enabled ? prefix.length : 0);
    }
};

/// Result of one receive run.  Error metrics are filled when ground-truth
/// blocks are supplied.
struct RunReport {
    std::vector<SymbolBlock> recovered_blocks;
    std::vector<double> per_block_max_abs_error;
    double max_abs_error = 0.0;
    double evm_rms = 0.0;
};

/// Modulate every block, insert prefixes and concatenate into one stream.
/// Discrete systems emit one sample per symbol (dt = Ts); the physical
/// system emits dt = Ts / oversampling.
ComplexSequence transmit(const PipelineConfig& cfg, const std::vector<SymbolBlock>& blocks);

/// Per block: drop the prefix, apply the receive transform, equalize by the
/// per-subcarrier channel coefficient when channel taps are known, and undo
/// the zero-start phase (-1)^n where that window case requires it.
RunReport receive(const PipelineConfig& cfg, const ComplexSequence& stream,
                  const std::optional<cvec>& channel_taps,
                  const std::vector<SymbolBlock>* truth = nullptr);

/// Per-subcarrier equalizer coefficients the receive transform divides by:
/// the channel response evaluated at the frequency each output instant
/// reads.  For the digital system this is the DFT of the zero-padded taps.
cvec equalizer_coefficients(const PipelineConfig& cfg, const cvec& channel_taps);

/// Receive-side amplitude distortion of a wideband single-carrier symbol
/// under a two-path delay difference: 2 sin^2(pi delta_tau / Ts).
double isi_distortion_wsc(double delta_tau, double ts);

/// Same distortion seen by subcarrier n of an N-carrier block:
/// 2 A_n sin^2(pi (n/N) (delta_tau / Ts)).  The narrowband subcarrier
/// shrinks the argument by n/N.
double isi_distortion_ofdm(int n, int n_total, double delta_tau, double ts, double a_n);

/// RMS symbol error normalized by RMS symbol magnitude.
double evm(const SymbolBlock& recovered, const SymbolBlock& truth);

}  // namespace aofdm
