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

#include "aofdm/transforms.hpp"

namespace aofdm {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, forward sign (-1).
void fft_radix2(cvec& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -kTwoPi / static_cast<double>(len);
        const cplx wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

cvec dft_direct(const cvec& x) {
    const std::size_t n = x.size();
    // One period of e^{-j 2 pi k / N}; index products are reduced mod N so the
    // kernel stays exact for large i*n.
    cvec tw(n);
    for (std::size_t k = 0; k < n; ++k)
        tw[k] = std::polar(1.0, -kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    cvec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc(0.0, 0.0);
        std::size_t idx = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += x[k] * tw[idx];
            idx += i;
            if (idx >= n) idx -= n;
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace

cvec dft(const cvec& x) {
    require(!x.empty(), "dft: empty input");
    if (is_pow2(x.size()) && x.size() >= 4) {
        cvec a = x;
        fft_radix2(a);
        return a;
    }
    return dft_direct(x);
}

cvec idft(const cvec& x) {
    require(!x.empty(), "idft: empty input");
    cvec a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) a[i] = std::conj(x[i]);
    a = dft(a);
    const double inv = 1.0 / static_cast<double>(x.size());
    for (auto& v : a) v = std::conj(v) * inv;
    return a;
}

cvec linear_convolve(const cvec& a, const cvec& b) {
    require(!a.empty() && !b.empty(), "linear_convolve: empty input");
    cvec out(a.size() + b.size() - 1, cplx(0.0, 0.0));
    for (std::size_t l = 0; l < b.size(); ++l) {
        const cplx bl = b[l];
        if (bl == cplx(0.0, 0.0)) continue;
        for (std::size_t k = 0; k < a.size(); ++k) out[k + l] += bl * a[k];
    }
    return out;
}

cvec circular_convolve(const cvec& a, const cvec& b) {
    require(!a.empty() && !b.empty(), "circular_convolve: empty input");
    require(b.size() <= a.size(), "circular_convolve: kernel longer than sequence");
    const std::size_t n = a.size();
    cvec out(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc(0.0, 0.0);
        for (std::size_t l = 0; l < b.size(); ++l) {
            const std::size_t idx = (i + n - l) % n;
            acc += b[l] * a[idx];
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace aofdm
