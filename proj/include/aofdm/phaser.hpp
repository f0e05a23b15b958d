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

#include "aofdm/rtft.hpp"
#include "aofdm/types.hpp"

namespace aofdm {

/// Linear-chirp all-pass phaser.  Quadratic phase response
///   H(w) = e^{j phi0} e^{j phi1 (w - wc)} e^{j (phi2/2) (w - wc)^2},
/// equivalently an affine group delay tau(w) = -phi1 - phi2 (w - wc).
struct PhaserParams {
    double phi0 = 0.0;     // rad
    double phi1 = 0.0;     // s
    double phi2 = 1.0;     // s^2/rad, nonzero
    double omega_c = 0.0;  // rad/s, >= 0

    RtftMapping mapping() const { return {phi1, phi2}; }
};

/// Chirp rates of the two quadratic phase modulators (time lenses) that
/// bracket the phaser.  Rates of 1/phi2 cancel the residual quadratic
/// phase exactly; zero disables a modulator.
struct QpmParams {
    double phi_l1 = 0.0;  // 1/s^2
    double phi_l2 = 0.0;  // 1/s^2

    static QpmParams matched(double phi2) { return {1.0 / phi2, 1.0 / phi2}; }
    static QpmParams disabled() { return {0.0, 0.0}; }
};

/// H(w); unit modulus for every w.
cplx transfer_function(double omega, const PhaserParams& p);

/// tau(w) = -phi1 - phi2 (w - wc), seconds.
double group_delay(double omega, const PhaserParams& p);

/// Complex amplitude of the impulse response, sqrt(2 pi / phi2) times a
/// fixed phase constant.  Only |gamma| = sqrt(2 pi / |phi2|) is load
/// bearing; the phase cancels against the envelope-removal stage.
cplx impulse_response_gamma(const PhaserParams& p);

/// h(t) = gamma e^{-j ((phi1 - wc phi2)/phi2) t} e^{-j t^2 / (2 phi2)},
/// a flat-envelope chirp.
cplx impulse_response_at(double t, const PhaserParams& p);
ComplexSequence impulse_response(const TimeGrid& grid, const PhaserParams& p);

/// T_in^2 / (2 pi |phi2|).  Values much below 1 mean dispersion alone
/// performs the Fourier transform (time-domain far-field regime).
double far_field_ratio(double t_in, double phi2);

/// Multiply sample-wise by e^{j (rate/2) t^2} using absolute sample times.
ComplexSequence qpm_modulate(const ComplexSequence& signal, double chirp_rate);

/// Full sampled simulation of the microwave dispersive-transform chain:
/// upconversion by e^{j wc t}, QPM1, convolution with the sampled phaser
/// impulse response (Riemann sum scaled by dt), QPM2, and coherent removal
/// of the known deterministic output factor.  The result approximates
/// sqrt(2 pi / |phi2|) times the Fourier transform of the input evaluated
/// at the instantaneous frequency of the time-frequency map.
///
/// `oversampling` ties the output window to a symbol period
/// Ts = input.dt * oversampling; the simulated grid is that window expanded
/// by the input duration on both sides.  Throws std::invalid_argument when
/// the grid cannot resolve the fastest chirp (phase step >= pi/4 per
/// sample); the message states the required dt.
ComplexSequence rtft_physical_chain(const ComplexSequence& input, const PhaserParams& p,
                                    const QpmParams& qpm, int oversampling);

}  // namespace aofdm
