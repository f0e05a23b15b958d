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

#include "aofdm/pipeline.hpp"

#include <cmath>
#include <sstream>

#include "aofdm/transforms.hpp"

namespace aofdm {

namespace {

double resolved_omega_c(const PipelineConfig& cfg) {
    return cfg.omega_c != 0.0 ? cfg.omega_c : default_omega_c(cfg.profile);
}

// Start of the transmit output window, 0 or T0/2 depending on the phi1 case.
double window_start(const PhaserParams& tx, double t0_block) {
    return -t0_block / 2.0 - tx.phi1;
}

cvec prefixed(const cvec& payload, const PrefixSpec& spec) {
    if (!spec.enabled) return payload;
    const PrefixedBlock b = spec.kind == PrefixKind::Cp
                                ? add_cp(payload, spec.length)
                                : add_zp(payload, spec.length);
    return b.samples;
}

// Transmit-side samples of one block for the ideal dispersive system:
// the continuous transform of the DAC train sampled at the window's symbol
// instants, scaled by Ts so the result matches the closed-form discrete
// modulator for the canonical positive-dispersion design.
cvec rtft_ideal_block(const PipelineConfig& cfg, const SymbolBlock& block,
                      const PhaserParams& tx) {
    const double ts = cfg.profile.ts;
    const double a = window_start(tx, cfg.profile.block_duration());
    cvec out(block.size());
    for (std::size_t k = 0; k < block.size(); ++k) {
        const double t = a + static_cast<double>(k) * ts;
        out[k] = ts * rtft_impulse_train_at(block, tx.mapping(), t);
    }
    return out;
}

// One physical-chain block: the exact DAC train through the sampled chain,
// restricted to the mapped output window.
cvec rtft_physical_block(const PipelineConfig& cfg, const SymbolBlock& block,
                         const PhaserParams& tx) {
    const int os = cfg.oversampling;
    const ComplexSequence train = dac_impulse_train(block, os);
    const ComplexSequence chain =
        rtft_physical_chain(train, tx, QpmParams::matched(tx.phi2), os);
    const double a = window_start(tx, cfg.profile.block_duration());
    const std::size_t count = block.size() * static_cast<std::size_t>(os);
    cvec out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = a + static_cast<double>(k) * chain.dt;
        const auto idx = static_cast<std::size_t>(std::llround((t - chain.t0) / chain.dt));
        require(idx < chain.size(), "rtft_physical_block: window outside chain grid");
        out[k] = chain.samples[idx];
    }
    return out;
}

}  // namespace

ComplexSequence transmit(const PipelineConfig& cfg, const std::vector<SymbolBlock>& blocks) {
    require(!blocks.empty(), "transmit: no blocks");
    const std::size_t n = static_cast<std::size_t>(cfg.profile.n);
    for (const SymbolBlock& b : blocks)
        require(b.size() == n, "transmit: block size does not match the profile");
    if (cfg.prefix.enabled && cfg.prefix.kind == PrefixKind::Cp)
        require(cfg.prefix.length <= n, "transmit: CP cannot exceed the block");

    PhaserParams tx = tx_params(cfg.profile, resolved_omega_c(cfg));

    ComplexSequence stream;
    stream.t0 = 0.0;
    const bool physical = cfg.kind == SystemKind::RtftPhysical;
    stream.dt = physical
                    ? cfg.profile.ts / static_cast<double>(cfg.oversampling)
                    : cfg.profile.ts;
    for (const SymbolBlock& block : blocks) {
        cvec payload;
        switch (cfg.kind) {
            case SystemKind::ConventionalFft:
                payload = modulate_discrete(block);
                break;
            case SystemKind::RtftIdeal:
                payload = rtft_ideal_block(cfg, block, tx);
                break;
            case SystemKind::RtftPhysical:
                payload = rtft_physical_block(cfg, block, tx);
                break;
        }
        PrefixSpec spec = cfg.prefix;
        if (physical && spec.enabled)
            spec.length *= static_cast<std::size_t>(cfg.oversampling);
        const cvec with_prefix = prefixed(payload, spec);
        stream.samples.insert(stream.samples.end(), with_prefix.begin(),
                              with_prefix.end());
    }
    return stream;
}

cvec equalizer_coefficients(const PipelineConfig& cfg, const cvec& channel_taps) {
    const std::size_t n = static_cast<std::size_t>(cfg.profile.n);
    require(!channel_taps.empty(), "equalizer_coefficients: empty channel");
    require(channel_taps.size() <= n, "equalizer_coefficients: channel longer than block");
    if (cfg.kind == SystemKind::ConventionalFft) {
        cvec padded(n, cplx(0.0, 0.0));
        std::copy(channel_taps.begin(), channel_taps.end(), padded.begin());
        return dft(padded);
    }
    // Subcarrier i is read at instantaneous frequency w_i = i*Ts/phi2_tx;
    // each delayed tap contributes e^{-j w_i l Ts}.
    const PhaserParams tx = tx_params(cfg.profile, resolved_omega_c(cfg));
    const double ts = cfg.profile.ts;
    cvec h_eq(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = static_cast<double>(i) * ts / tx.phi2;
        cplx acc(0.0, 0.0);
        for (std::size_t l = 0; l < channel_taps.size(); ++l)
            acc += channel_taps[l] *
                   std::polar(1.0, -wi * static_cast<double>(l) * ts);
        h_eq[i] = acc;
    }
    return h_eq;
}

RunReport receive(const PipelineConfig& cfg, const ComplexSequence& stream,
                  const std::optional<cvec>& channel_taps,
                  const std::vector<SymbolBlock>* truth) {
    const std::size_t n = static_cast<std::size_t>(cfg.profile.n);
    const bool physical = cfg.kind == SystemKind::RtftPhysical;
    const std::size_t os =
        physical ? static_cast<std::size_t>(cfg.oversampling) : 1;
    const std::size_t stride = cfg.block_stride() * os;
    const std::size_t prefix_len = (cfg.prefix.enabled ? cfg.prefix.length : 0) * os;
    require(stream.samples.size() >= stride, "receive: stream shorter than one block");
    const std::size_t block_count = stream.samples.size() / stride;

    const double ts = cfg.profile.ts;
    const double t0_block = cfg.profile.block_duration();
    const PhaserParams tx = tx_params(cfg.profile, resolved_omega_c(cfg));
    const PhaserParams rx = rx_params(tx);
    const double a = window_start(tx, t0_block);
    const bool zero_start = cfg.profile.phi1_case == Phi1Case::ZeroStart;

    std::optional<cvec> h_eq;
    if (channel_taps) {
        h_eq = equalizer_coefficients(cfg, *channel_taps);
        std::ostringstream bad;
        bool singular = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs((*h_eq)[i]) < cfg.equalizer_floor) {
                bad << (singular ? ", " : "") << i;
                singular = true;
            }
        }
        if (singular)
            throw std::runtime_error(
                "receive: equalizer coefficient magnitude below floor at bins " +
                bad.str());
    }

    // Known receive gains of the two dispersive paths (the analog of ADC
    // full-scale calibration); derived from the closed-form cascade.
    const double g_ideal =
        kTwoPi * std::sqrt(static_cast<double>(n)) * std::sqrt(kTwoPi / std::abs(rx.phi2));
    const double g_physical = std::sqrt(kTwoPi / std::abs(rx.phi2)) *
                              std::sqrt(kTwoPi / std::abs(tx.phi2)) * t0_block;

    RunReport report;
    report.recovered_blocks.reserve(block_count);
    double err_num = 0.0, err_den = 0.0;

    for (std::size_t m = 0; m < block_count; ++m) {
        const std::size_t begin = m * stride;
        const std::size_t region_len =
            std::min(stream.samples.size() - begin, stride + prefix_len);
        const cvec region(stream.samples.begin() + static_cast<std::ptrdiff_t>(begin),
                          stream.samples.begin() +
                              static_cast<std::ptrdiff_t>(begin + region_len));
        cvec payload;
        if (cfg.prefix.enabled)
            payload = extract_payload(region, cfg.prefix.kind, prefix_len, n * os);
        else
            payload = cvec(region.begin(), region.begin() + static_cast<std::ptrdiff_t>(n * os));

        cvec symbols;
        switch (cfg.kind) {
            case SystemKind::ConventionalFft:
                symbols = demodulate_discrete(payload);
                break;
            case SystemKind::RtftIdeal: {
                symbols = rtft_receive_discrete(payload, ts, a, rx.mapping());
                for (auto& v : symbols) v /= g_ideal;
                break;
            }
            case SystemKind::RtftPhysical: {
                ComplexSequence block_seq;
                block_seq.samples = payload;
                block_seq.dt = stream.dt;
                block_seq.t0 = a;
                const ComplexSequence chain = rtft_physical_chain(
                    block_seq, rx, QpmParams::matched(rx.phi2), cfg.oversampling);
                symbols.resize(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const double t = static_cast<double>(i) * ts;
                    const auto idx = static_cast<std::size_t>(
                        std::llround((t - chain.t0) / chain.dt));
                    require(idx < chain.size(), "receive: sample outside chain grid");
                    symbols[i] = chain.samples[idx] / g_physical;
                }
                break;
            }
        }

        if (h_eq)
            for (std::size_t i = 0; i < n; ++i) symbols[i] /= (*h_eq)[i];
        if (cfg.kind != SystemKind::ConventionalFft && zero_start &&
            cfg.compensate_zero_start)
            for (std::size_t i = 1; i < n; i += 2) symbols[i] = -symbols[i];

        SymbolBlock rec;
        rec.symbols = std::move(symbols);
        rec.block_index = static_cast<int>(m);
        rec.symbol_period = ts;

        if (truth) {
            require(m < truth->size() && (*truth)[m].size() == n,
                    "receive: ground truth does not match the stream");
            const cvec& x = (*truth)[m].symbols;
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double e = std::abs(rec.symbols[i] - x[i]);
                worst = std::max(worst, e);
                err_num += e * e;
                err_den += std::norm(x[i]);
            }
            report.per_block_max_abs_error.push_back(worst);
            report.max_abs_error = std::max(report.max_abs_error, worst);
        }
        report.recovered_blocks.push_back(std::move(rec));
    }
    if (truth && err_den > 0.0) report.evm_rms = std::sqrt(err_num / err_den);
    return report;
}

double isi_distortion_wsc(double delta_tau, double ts) {
    require(ts > 0.0, "isi_distortion_wsc: Ts must be positive");
    const double s = std::sin(kPi * delta_tau / ts);
    return 2.0 * s * s;
}

double isi_distortion_ofdm(int n, int n_total, double delta_tau, double ts, double a_n) {
    require(n_total >= 1, "isi_distortion_ofdm: N must be >= 1");
    require(n >= 0 && n <= n_total, "isi_distortion_ofdm: subcarrier index out of range");
    require(ts > 0.0, "isi_distortion_ofdm: Ts must be positive");
    const double s = std::sin(kPi * (static_cast<double>(n) / n_total) * (delta_tau / ts));
    return 2.0 * a_n * s * s;
}

double evm(const SymbolBlock& recovered, const SymbolBlock& truth) {
    require(recovered.size() == truth.size(), "evm: block sizes differ");
    require(!truth.symbols.empty(), "evm: empty blocks");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        num += std::norm(recovered.symbols[i] - truth.symbols[i]);
        den += std::norm(truth.symbols[i]);
    }
    require(den > 0.0, "evm: zero-power reference block");
    return std::sqrt(num / den);
}

}  // namespace aofdm
