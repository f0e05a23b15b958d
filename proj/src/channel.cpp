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

#include "aofdm/channel.hpp"

#include <cmath>
#include <sstream>

#include "aofdm/rng.hpp"

namespace aofdm {

cvec ChannelRealization::discrete_gains() const {
    cvec g(taps.size());
    for (std::size_t l = 0; l < taps.size(); ++l) g[l] = taps[l].gain;
    return g;
}

cvec ChannelRealization::discrete_kernel(double ts) const {
    require(ts > 0.0, "discrete_kernel: ts must be positive");
    require(!taps.empty(), "discrete_kernel: empty channel");
    std::vector<std::size_t> idx(taps.size());
    std::size_t last = 0;
    for (std::size_t l = 0; l < taps.size(); ++l) {
        const double d = taps[l].delay / ts;
        const double r = std::round(d);
        if (d < -1e-9 || std::abs(d - r) > 1e-9 * std::max(1.0, std::abs(d))) {
            std::ostringstream msg;
            msg << "discrete_kernel: tap delay " << taps[l].delay
                << " s is not an integer multiple of " << ts << " s";
            throw std::invalid_argument(msg.str());
        }
        idx[l] = static_cast<std::size_t>(r);
        last = std::max(last, idx[l]);
    }
    cvec kernel(last + 1, cplx(0.0, 0.0));
    for (std::size_t l = 0; l < taps.size(); ++l) kernel[idx[l]] += taps[l].gain;
    return kernel;
}

double bessel_i0_scaled(double x) {
    x = std::abs(x);
    if (x < 20.0) {
        // Power series sum_k (x^2/4)^k / (k!)^2, scaled by e^{-x}.
        const double q = x * x / 4.0;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 90; ++k) {
            term *= q / (static_cast<double>(k) * static_cast<double>(k));
            sum += term;
            if (term < sum * 1e-18) break;
        }
        return sum * std::exp(-x);
    }
    // Asymptotic expansion: I0(x) ~ e^x / sqrt(2 pi x) * sum_k a_k x^{-k},
    // a_k = ((2k-1)!!)^2 / (k! 8^k).
    double sum = 1.0, ak = 1.0;
    for (int k = 1; k <= 9; ++k) {
        const double odd = 2.0 * k - 1.0;
        ak *= odd * odd / (8.0 * static_cast<double>(k));
        sum += ak / std::pow(x, k);
    }
    return sum / std::sqrt(kTwoPi * x);
}

double rice_pdf(double r, const RicianSpec& spec) {
    require(r >= 0.0, "rice_pdf: r must be nonnegative");
    require(spec.sigma > 0.0, "rice_pdf: sigma must be positive");
    require(spec.s >= 0.0, "rice_pdf: s must be nonnegative");
    const double s2 = spec.sigma * spec.sigma;
    const double d = r - spec.s;
    // (r/sigma^2) exp(-(r-s)^2/(2 sigma^2)) * [e^{-rs/sigma^2} I0(rs/sigma^2)]
    return r / s2 * std::exp(-d * d / (2.0 * s2)) * bessel_i0_scaled(r * spec.s / s2);
}

ChannelRealization sample_channel(std::uint64_t seed, const RicianSpec& spec) {
    require(spec.tap_count >= 1, "sample_channel: tap count must be >= 1");
    require(spec.sigma > 0.0, "sample_channel: sigma must be positive");
    require(spec.spacing > 0.0, "sample_channel: spacing must be positive");
    Rng rng(seed);
    ChannelRealization ch;
    ch.taps.resize(static_cast<std::size_t>(spec.tap_count));
    for (std::size_t l = 0; l < ch.taps.size(); ++l) {
        const double s_l =
            l < spec.s_per_tap.size() ? spec.s_per_tap[l] : spec.s;
        const double re = s_l + spec.sigma * rng.normal();
        const double im = spec.sigma * rng.normal();
        const double mag = std::hypot(re, im);
        const double phase = rng.uniform_angle();
        ch.taps[l].gain = std::polar(mag, phase);
        ch.taps[l].delay = spec.tau0 + static_cast<double>(l) * spec.spacing;
    }
    return ch;
}

cvec apply_discrete(const cvec& x, const cvec& h) {
    require(!x.empty(), "apply_discrete: empty input");
    require(!h.empty(), "apply_discrete: empty channel");
    cvec y(x.size(), cplx(0.0, 0.0));
    for (std::size_t n = 0; n < x.size(); ++n) {
        cplx acc(0.0, 0.0);
        const std::size_t lmax = std::min(h.size() - 1, n);
        for (std::size_t l = 0; l <= lmax; ++l) acc += h[l] * x[n - l];
        y[n] = acc;
    }
    return y;
}

ComplexSequence apply_continuous(const ComplexSequence& x, const ChannelRealization& ch) {
    require(!x.samples.empty(), "apply_continuous: empty input");
    require(x.dt > 0.0, "apply_continuous: dt must be positive");
    require(!ch.taps.empty(), "apply_continuous: empty channel");

    std::vector<std::size_t> shifts(ch.taps.size());
    std::size_t max_shift = 0;
    for (std::size_t l = 0; l < ch.taps.size(); ++l) {
        const double d = ch.taps[l].delay / x.dt;
        const double r = std::round(d);
        if (d < -1e-9 || std::abs(d - r) > 1e-9 * std::max(1.0, std::abs(d))) {
            std::ostringstream msg;
            msg << "apply_continuous: tap delay " << ch.taps[l].delay
                << " s is not an integer multiple of the sample period " << x.dt
                << " s";
            throw std::invalid_argument(msg.str());
        }
        shifts[l] = static_cast<std::size_t>(r);
        max_shift = std::max(max_shift, shifts[l]);
    }

    ComplexSequence y;
    y.dt = x.dt;
    y.t0 = x.t0;
    y.samples.assign(x.samples.size() + max_shift, cplx(0.0, 0.0));
    for (std::size_t l = 0; l < ch.taps.size(); ++l) {
        const cplx g = ch.taps[l].gain;
        const std::size_t d = shifts[l];
        for (std::size_t k = 0; k < x.samples.size(); ++k)
            y.samples[k + d] += g * x.samples[k];
    }
    return y;
}

}  // namespace aofdm
