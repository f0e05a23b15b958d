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

#include "aofdm/types.hpp"

namespace aofdm {

/// One subcarrier of an N-carrier block: frequency n/T0, amplitude 1/sqrt(N)
/// under the equal-power convention.
struct SubcarrierSpec {
    int n = 0;
    double amplitude = 1.0;
    double frequency = 0.0;  // Hz

    static SubcarrierSpec for_block(int n, std::size_t block_size, double ts);
};

/// Rectangular window, 1 on [center - width/2, center + width/2), 0 outside.
/// The right endpoint is open so that concatenated blocks tile the time axis.
struct WindowSpec {
    double center = 0.0;
    double width = 1.0;

    bool contains(double t) const {
        return t >= center - width / 2.0 && t < center + width / 2.0;
    }
};

/// Continuous-time block waveform
///   x(t) = (1/sqrt(N)) sum_n X[n] e^{j 2 pi (n/T0) t},  t in [0, T0),
/// rendered on a uniform grid with dt = Ts / oversampling.
ComplexSequence modulate_continuous(const SymbolBlock& block, int oversampling);

/// Evaluate x(t) of modulate_continuous at one instant (window applied).
cplx modulate_continuous_at(const SymbolBlock& block, double t);

/// Block spectrum, a weighted sum of sinc functions centered on the
/// subcarrier frequencies:
///   x~(f) = (T0/sqrt(N)) sum_n X[n] e^{-j pi (f - n/T0) T0} sinc((f - n/T0) T0),
/// the exact transform of the windowed block waveform.
cvec spectrum(const SymbolBlock& block, const std::vector<double>& freq_grid);

/// Per-subcarrier spectrum term (used for figure data).
cplx spectrum_term(const SymbolBlock& block, int n, double f);

/// Discrete modulator: x[k] = (1/sqrt(N)) sum_n X[n] e^{j 2 pi k n / N}.
/// Note the 1/sqrt(N) normalization, not 1/N.
cvec modulate_discrete(const SymbolBlock& block);

/// Discrete demodulator: X^[n] = (1/sqrt(N)) sum_k x[k] e^{-j 2 pi k n / N};
/// exact inverse of modulate_discrete.
cvec demodulate_discrete(const cvec& samples);

/// sinc(u) = sin(pi u) / (pi u), sinc(0) = 1.
double sinc(double u);

}  // namespace aofdm
