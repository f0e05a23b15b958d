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

#include "aofdm/phaser.hpp"

#include <sstream>

namespace aofdm {

cplx transfer_function(double omega, const PhaserParams& p) {
    const double d = omega - p.omega_c;
    return std::polar(1.0, p.phi0 + p.phi1 * d + 0.5 * p.phi2 * d * d);
}

double group_delay(double omega, const PhaserParams& p) {
    return -p.phi1 - p.phi2 * (omega - p.omega_c);
}

cplx impulse_response_gamma(const PhaserParams& p) {
    require(p.phi2 != 0.0, "impulse_response: phi2 must be nonzero");
    // Principal-branch sqrt; for negative phi2 this contributes the +j of
    // the stationary-phase constant.  The remaining phase terms are a fixed
    // global constant.
    const cplx root = std::sqrt(cplx(kTwoPi / p.phi2, 0.0));
    const double phase = kPi / 4.0 + p.phi0 + p.phi1 * p.omega_c -
                         p.phi1 * p.phi1 / p.phi2 -
                         0.5 * p.phi2 * p.omega_c * p.omega_c;
    return root * std::polar(1.0, phase);
}

cplx impulse_response_at(double t, const PhaserParams& p) {
    require(p.phi2 != 0.0, "impulse_response: phi2 must be nonzero");
    const double lin = -(p.phi1 - p.omega_c * p.phi2) / p.phi2;
    return impulse_response_gamma(p) *
           std::polar(1.0, lin * t - t * t / (2.0 * p.phi2));
}

ComplexSequence impulse_response(const TimeGrid& grid, const PhaserParams& p) {
    require(grid.count >= 1, "impulse_response: empty grid");
    ComplexSequence out;
    out.t0 = grid.t0;
    out.dt = grid.dt;
    out.samples.resize(grid.count);
    for (std::size_t k = 0; k < grid.count; ++k)
        out.samples[k] = impulse_response_at(grid.time_at(k), p);
    return out;
}

double far_field_ratio(double t_in, double phi2) {
    require(t_in > 0.0, "far_field_ratio: input duration must be positive");
    require(phi2 != 0.0, "far_field_ratio: phi2 must be nonzero");
    return t_in * t_in / (kTwoPi * std::abs(phi2));
}

ComplexSequence qpm_modulate(const ComplexSequence& signal, double chirp_rate) {
    ComplexSequence out = signal;
    if (chirp_rate == 0.0) return out;
    for (std::size_t k = 0; k < out.samples.size(); ++k) {
        const double t = out.time_at(k);
        out.samples[k] *= std::polar(1.0, 0.5 * chirp_rate * t * t);
    }
    return out;
}

namespace {

// Fastest phase slope (rad/s) of the convolution integrand over the
// simulated grid.  Output-side rotations (second lens, envelope removal)
// are pointwise exact and do not enter.  Both contributions are affine in
// time, so their extrema sit at interval endpoints.
double max_phase_rate(const ComplexSequence& input, const PhaserParams& p,
                      const QpmParams& qpm, double t_lo, double t_hi) {
    const double in_lo = input.t0;
    const double in_hi = input.t0 + input.duration();
    const double mixer = std::max(std::abs(p.omega_c + qpm.phi_l1 * in_lo),
                                  std::abs(p.omega_c + qpm.phi_l1 * in_hi));
    const double lin = -(p.phi1 - p.omega_c * p.phi2) / p.phi2;
    const double d_lo = t_lo - in_hi;
    const double d_hi = t_hi - in_lo;
    const double kernel = std::max(std::abs(-lin + d_lo / p.phi2),
                                   std::abs(-lin + d_hi / p.phi2));
    return mixer + kernel;
}

}  // namespace

ComplexSequence rtft_physical_chain(const ComplexSequence& input, const PhaserParams& p,
                                    const QpmParams& qpm, int oversampling) {
    require(!input.samples.empty(), "rtft_physical_chain: empty input");
    require(input.dt > 0.0, "rtft_physical_chain: dt must be positive");
    require(oversampling >= 1, "rtft_physical_chain: oversampling must be >= 1");
    require(p.phi2 != 0.0, "rtft_physical_chain: phi2 must be nonzero");

    const double dt = input.dt;
    const double ts = dt * static_cast<double>(oversampling);
    const OutputWindow win = output_window(p.mapping(), ts);
    const double t_in = input.duration();

    // Output grid: the mapped window expanded by the input duration on both
    // sides, snapped onto multiples of dt so symbol instants stay on-grid.
    const double t_lo = std::floor((win.t_min - t_in) / dt) * dt;
    const double t_hi = win.t_max + t_in;
    const std::size_t n_out = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / dt)) + 1;

    const double rate = max_phase_rate(input, p, qpm, t_lo, t_hi);
    if (rate * dt >= kPi / 4.0) {
        std::ostringstream msg;
        msg << "rtft_physical_chain: chirp under-resolved, dt=" << dt
            << " s but dt < " << (kPi / 4.0) / rate << " s required";
        throw std::invalid_argument(msg.str());
    }

    // Upconvert and apply the first time lens.
    cvec s(input.samples.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double tau = input.time_at(k);
        s[k] = input.samples[k] *
               std::polar(1.0, p.omega_c * tau + 0.5 * qpm.phi_l1 * tau * tau);
    }

    const cplx gamma = impulse_response_gamma(p);
    const double lin = -(p.phi1 - p.omega_c * p.phi2) / p.phi2;
    const double inv2phi2 = 1.0 / (2.0 * p.phi2);

    ComplexSequence out;
    out.t0 = t_lo;
    out.dt = dt;
    out.samples.assign(n_out, cplx(0.0, 0.0));

    // Riemann-sum convolution with the sampled impulse response, then the
    // second time lens and coherent removal of the deterministic output
    // factor gamma e^{j lin t} e^{-j t^2/(2 phi2)} e^{j (phi_l2/2) t^2}.
    const cplx gamma_dt = gamma * dt;
    for (std::size_t i = 0; i < n_out; ++i) {
        const double t = out.time_at(i);
        cplx acc(0.0, 0.0);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const double d = t - input.time_at(k);
            acc += s[k] * std::polar(1.0, lin * d - d * d * inv2phi2);
        }
        const cplx raw = gamma_dt * acc;
        const double outer_phase = std::arg(gamma) + lin * t +
                                   (0.5 * qpm.phi_l2 - inv2phi2) * t * t;
        // raw already includes the QPM2-free phase; apply QPM2 then strip
        // the whole known factor in one rotation.
        const double qpm2_phase = 0.5 * qpm.phi_l2 * t * t;
        out.samples[i] = raw * std::polar(1.0, qpm2_phase - outer_phase);
    }
    return out;
}

}  // namespace aofdm
