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

/// Time-frequency map of an ideal dispersive Fourier transformer.  The
/// output at time t_out carries the input spectrum at the instantaneous
/// frequency w(t_out) = -(phi1 + t_out)/phi2.
struct RtftMapping {
    double phi1 = 0.0;  // group delay parameter, seconds
    double phi2 = 1.0;  // group delay dispersion, s^2/rad, nonzero
};

struct OutputWindow {
    double t_min = 0.0;
    double t_max = 0.0;
    double width() const { return t_max - t_min; }
};

/// Instantaneous input frequency mapped to output time t_out (rad/s).
double instantaneous_frequency(double t_out, const RtftMapping& m);

/// Output time interval onto which the Nyquist band [-pi/Ts, pi/Ts] of an
/// impulse-train input with spacing Ts is mapped.  Width is 2*pi*|phi2|/Ts;
/// a negative phi2 swaps the endpoints.
OutputWindow output_window(const RtftMapping& m, double ts);

/// Dispersive transform of the DAC impulse train sum_n X[n] delta(t - n Ts),
/// evaluated exactly at one output instant:
///   Psi(t) = sqrt(2 pi / |phi2|) sum_n X[n] e^{j ((phi1 + t)/phi2) n Ts}.
/// The integral over the delta train collapses to this finite sum, so there
/// is no quadrature error.
cplx rtft_impulse_train_at(const SymbolBlock& block, const RtftMapping& m, double t_out);

/// Same transform rendered over a uniform output grid.
ComplexSequence rtft_impulse_train(const SymbolBlock& block, const RtftMapping& m,
                                   const TimeGrid& out_grid);

/// Closed-form discrete-time samples of the dispersive OFDM modulator:
///   x[k] = (2 pi / sqrt(N)) sum_n X[n] e^{j 2 pi k n / N} e^{j n pi}.
/// Identical for both admissible phi1 choices.  The 2 pi amplitude factor
/// is retained; use rms_normalize when comparing against the IDFT modem.
cvec rtft_ofdm_discrete(const SymbolBlock& block);

/// Receiver-side dispersive transform of a block of N time samples taken at
/// t_k = window_start + k Ts, evaluated at output instants t = i Ts:
///   Y[i] = sqrt(2 pi / |phi2|) sum_k y[k] e^{j ((phi1 + i Ts)/phi2) t_k}.
/// With the inverse-dispersion receiver mapping this is the analog
/// counterpart of the DFT demodulator.
cvec rtft_receive_discrete(const cvec& y, double ts, double window_start,
                           const RtftMapping& rx);

/// Impulse-train rendering of a symbol block on a fine grid: sample value
/// X[n]/dt at t = n Ts, zero elsewhere.  Feeding this into a sampled
/// convolution reproduces the exact delta-train integral.
ComplexSequence dac_impulse_train(const SymbolBlock& block, int oversampling);

/// Plot-only normalization used for figure reproduction: real and imaginary
/// parts are scaled independently by their own (signed) maxima.  Not an
/// algebraic normalization; never used in numeric comparisons.
cvec plot_normalize(const cvec& v);

}  // namespace aofdm
