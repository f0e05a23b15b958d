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

#include "aofdm/ofdm.hpp"

namespace aofdm {

SubcarrierSpec SubcarrierSpec::for_block(int n, std::size_t block_size, double ts) {
    require(block_size >= 1, "SubcarrierSpec: empty block");
    require(ts > 0.0, "SubcarrierSpec: Ts must be positive");
    const double t0 = static_cast<double>(block_size) * ts;
    SubcarrierSpec s;
    s.n = n;
    s.amplitude = 1.0 / std::sqrt(static_cast<double>(block_size));
    s.frequency = static_cast<double>(n) / t0;
    return s;
}

double sinc(double u) {
    const double x = kPi * u;
    if (std::abs(x) < 1e-9) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

cplx modulate_continuous_at(const SymbolBlock& block, double t) {
    const std::size_t n = block.size();
    require(n >= 1, "modulate_continuous: empty block");
    const double t0 = block.block_duration();
    WindowSpec w{t0 / 2.0, t0};
    if (!w.contains(t)) return cplx(0.0, 0.0);
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = static_cast<double>(k) / t0;
        acc += block.symbols[k] * std::polar(1.0, kTwoPi * fk * t);
    }
    return acc / std::sqrt(static_cast<double>(n));
}

ComplexSequence modulate_continuous(const SymbolBlock& block, int oversampling) {
    const std::size_t n = block.size();
    require(n >= 1, "modulate_continuous: empty block");
    require(oversampling >= 1, "modulate_continuous: oversampling must be >= 1");
    const double dt = block.symbol_period / static_cast<double>(oversampling);
    const std::size_t count = n * static_cast<std::size_t>(oversampling);
    ComplexSequence out;
    out.dt = dt;
    out.t0 = 0.0;
    out.samples.resize(count);
    const double t0 = block.block_duration();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) * dt;
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            acc += block.symbols[m] *
                   std::polar(1.0, kTwoPi * static_cast<double>(m) * t / t0);
        }
        out.samples[k] = acc * scale;
    }
    return out;
}

// Each windowed tone integrates to T0 e^{-j pi (f - fn) T0} sinc((f - fn) T0);
// the per-term phase keeps this the exact transform of the block waveform
// (the magnitude matches the plain sinc-sum form either way).
cplx spectrum_term(const SymbolBlock& block, int n, double f) {
    const std::size_t nsub = block.size();
    require(nsub >= 1, "spectrum: empty block");
    const double t0 = block.block_duration();
    const double fn = static_cast<double>(n) / t0;
    const double u = (f - fn) * t0;
    return (t0 / std::sqrt(static_cast<double>(nsub))) *
           std::polar(1.0, -kPi * u) *
           block.symbols[static_cast<std::size_t>(n)] * sinc(u);
}

cvec spectrum(const SymbolBlock& block, const std::vector<double>& freq_grid) {
    const std::size_t n = block.size();
    require(n >= 1, "spectrum: empty block");
    const double t0 = block.block_duration();
    const double scale = t0 / std::sqrt(static_cast<double>(n));
    cvec out(freq_grid.size());
    for (std::size_t i = 0; i < freq_grid.size(); ++i) {
        const double f = freq_grid[i];
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double u = (f - static_cast<double>(m) / t0) * t0;
            acc += block.symbols[m] * std::polar(1.0, -kPi * u) * sinc(u);
        }
        out[i] = scale * acc;
    }
    return out;
}

cvec modulate_discrete(const SymbolBlock& block) {
    const std::size_t n = block.size();
    require(n >= 1, "modulate_discrete: empty block");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    cvec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double ang = kTwoPi * static_cast<double>((k * m) % n) /
                               static_cast<double>(n);
            acc += block.symbols[m] * std::polar(1.0, ang);
        }
        out[k] = acc * scale;
    }
    return out;
}

cvec demodulate_discrete(const cvec& samples) {
    const std::size_t n = samples.size();
    require(n >= 1, "demodulate_discrete: empty input");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    cvec out(n);
    for (std::size_t m = 0; m < n; ++m) {
        cplx acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double ang = -kTwoPi * static_cast<double>((k * m) % n) /
                               static_cast<double>(n);
            acc += samples[k] * std::polar(1.0, ang);
        }
        out[m] = acc * scale;
    }
    return out;
}

}  // namespace aofdm
