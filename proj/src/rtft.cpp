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

#include "aofdm/rtft.hpp"

namespace aofdm {

double instantaneous_frequency(double t_out, const RtftMapping& m) {
    require(m.phi2 != 0.0, "rtft: phi2 must be nonzero");
    return -(m.phi1 + t_out) / m.phi2;
}

OutputWindow output_window(const RtftMapping& m, double ts) {
    require(ts > 0.0, "output_window: Ts must be positive");
    require(m.phi2 != 0.0, "rtft: phi2 must be nonzero");
    const double edge = kPi / ts * m.phi2;
    if (m.phi2 >= 0.0) return {-edge - m.phi1, edge - m.phi1};
    return {edge - m.phi1, -edge - m.phi1};
}

cplx rtft_impulse_train_at(const SymbolBlock& block, const RtftMapping& m, double t_out) {
    require(!block.symbols.empty(), "rtft_impulse_train: empty block");
    require(m.phi2 != 0.0, "rtft: phi2 must be nonzero");
    const double amp = std::sqrt(kTwoPi / std::abs(m.phi2));
    const double rate = (m.phi1 + t_out) / m.phi2;
    cplx acc(0.0, 0.0);
    for (std::size_t n = 0; n < block.size(); ++n) {
        const double tn = static_cast<double>(n) * block.symbol_period;
        acc += block.symbols[n] * std::polar(1.0, rate * tn);
    }
    return amp * acc;
}

ComplexSequence rtft_impulse_train(const SymbolBlock& block, const RtftMapping& m,
                                   const TimeGrid& out_grid) {
    require(out_grid.count >= 1, "rtft_impulse_train: empty output grid");
    ComplexSequence out;
    out.t0 = out_grid.t0;
    out.dt = out_grid.dt;
    out.samples.resize(out_grid.count);
    for (std::size_t k = 0; k < out_grid.count; ++k)
        out.samples[k] = rtft_impulse_train_at(block, m, out_grid.time_at(k));
    return out;
}

cvec rtft_ofdm_discrete(const SymbolBlock& block) {
    const std::size_t n = block.size();
    require(n >= 1, "rtft_ofdm_discrete: empty block");
    const double scale = kTwoPi / std::sqrt(static_cast<double>(n));
    cvec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double ang = kTwoPi * static_cast<double>((k * m) % n) /
                                   static_cast<double>(n) +
                               kPi * static_cast<double>(m);
            acc += block.symbols[m] * std::polar(1.0, ang);
        }
        out[k] = acc * scale;
    }
    return out;
}

cvec rtft_receive_discrete(const cvec& y, double ts, double window_start,
                           const RtftMapping& rx) {
    require(!y.empty(), "rtft_receive_discrete: empty input");
    require(ts > 0.0, "rtft_receive_discrete: Ts must be positive");
    require(rx.phi2 != 0.0, "rtft: phi2 must be nonzero");
    const std::size_t n = y.size();
    const double amp = std::sqrt(kTwoPi / std::abs(rx.phi2));
    cvec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double rate = (rx.phi1 + static_cast<double>(i) * ts) / rx.phi2;
        cplx acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double tk = window_start + static_cast<double>(k) * ts;
            acc += y[k] * std::polar(1.0, rate * tk);
        }
        out[i] = amp * acc;
    }
    return out;
}

ComplexSequence dac_impulse_train(const SymbolBlock& block, int oversampling) {
    require(!block.symbols.empty(), "dac_impulse_train: empty block");
    require(oversampling >= 1, "dac_impulse_train: oversampling must be >= 1");
    const std::size_t os = static_cast<std::size_t>(oversampling);
    ComplexSequence out;
    out.dt = block.symbol_period / static_cast<double>(oversampling);
    out.t0 = 0.0;
    out.samples.assign(block.size() * os, cplx(0.0, 0.0));
    for (std::size_t n = 0; n < block.size(); ++n)
        out.samples[n * os] = block.symbols[n] / out.dt;
    return out;
}

cvec plot_normalize(const cvec& v) {
    if (v.empty()) return v;
    // Signed maxima, exactly as the figure scaling is defined.
    double re_max = v[0].real(), im_max = v[0].imag();
    for (const cplx& x : v) {
        re_max = std::max(re_max, x.real());
        im_max = std::max(im_max, x.imag());
    }
    cvec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double re = re_max != 0.0 ? v[i].real() / re_max : v[i].real();
        const double im = im_max != 0.0 ? v[i].imag() / im_max : v[i].imag();
        out[i] = cplx(re, im);
    }
    return out;
}

}  // namespace aofdm
