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

#include <cstdint>

#include "aofdm/types.hpp"

namespace aofdm {

struct ChannelTap {
    cplx gain;
    double delay = 0.0;  // seconds
};

/// One draw of a noiseless LTI multipath channel
///   h(t) = sum_l gain_l delta(t - delay_l),  delays strictly increasing.
struct ChannelRealization {
    std::vector<ChannelTap> taps;

    std::size_t tap_count() const { return taps.size(); }
    /// Tap gains as a discrete kernel, assuming uniform spacing of one
    /// sample per tap starting at delay zero.
    cvec discrete_gains() const;
    /// Tap gains placed at round(delay/ts) with zeros between; delays must
    /// fall on the symbol grid.
    cvec discrete_kernel(double ts) const;
};

/// Rician tap statistics: line-of-sight amplitude s, scattered standard
/// deviation sigma per quadrature component.  When s = 0 this reduces to
/// Rayleigh fading.  The same (s, sigma) applies to every tap unless
/// s_per_tap overrides individual line-of-sight amplitudes.
struct RicianSpec {
    double s = 0.0;        // >= 0
    double sigma = 1.0;    // > 0
    int tap_count = 1;     // L >= 1
    double tau0 = 0.0;     // first-path delay, seconds
    double spacing = 1.0;  // uniform tap spacing, seconds
    std::vector<double> s_per_tap;  // optional per-tap LoS amplitude
};

/// Rice probability density
///   p(r) = (r/sigma^2) e^{-(r^2+s^2)/(2 sigma^2)} I0(r s / sigma^2),
/// evaluated in exponentially scaled form so large arguments do not
/// overflow.  s = 0 gives the Rayleigh density.
double rice_pdf(double r, const RicianSpec& spec);

/// Modified Bessel I0 via power series for small argument and the
/// asymptotic expansion for large argument, returned as e^{-x} I0(x).
double bessel_i0_scaled(double x);

/// Deterministic channel draw: |gain| Rician via a nonzero-mean complex
/// Gaussian, phase uniform on (0, 2 pi), delays tau0 + l*spacing.
ChannelRealization sample_channel(std::uint64_t seed, const RicianSpec& spec);

/// Stream convolution y[n] = sum_l h[l] x[n-l] with x[<0] = 0; output has
/// the same length as x (the tail beyond the stream end belongs to the
/// following samples the caller supplies).
cvec apply_discrete(const cvec& x, const cvec& h);

/// Continuous-time superposition of gain-weighted delayed copies.  Delays
/// must fall on the sample grid; the output grid extends to cover the last
/// delayed sample.
ComplexSequence apply_continuous(const ComplexSequence& x, const ChannelRealization& ch);

}  // namespace aofdm
