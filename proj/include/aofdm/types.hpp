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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace aofdm {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Uniformly sampled complex baseband series.  Sample k sits at t0 + k*dt.
/// All operations treat instances as immutable values.
struct ComplexSequence {
    cvec samples;
    double dt = 1.0;  // sample period, seconds (> 0)
    double t0 = 0.0;  // time of first sample, seconds

    std::size_t size() const { return samples.size(); }
    double time_at(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    double duration() const { return static_cast<double>(samples.size()) * dt; }
};

/// The N data symbols X[n] of one OFDM block.  Block duration is N*Ts.
struct SymbolBlock {
    cvec symbols;
    int block_index = 0;
    double symbol_period = 1.0;  // Ts, seconds

    std::size_t size() const { return symbols.size(); }
    double block_duration() const {
        return static_cast<double>(symbols.size()) * symbol_period;
    }
};

/// Uniform time grid descriptor used when rendering continuous-time results.
struct TimeGrid {
    double t0 = 0.0;
    double dt = 1.0;
    std::size_t count = 0;

    double time_at(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
};

inline void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

inline double energy(const cvec& v) {
    double e = 0.0;
    for (const cplx& x : v) e += std::norm(x);
    return e;
}

inline double rms(const cvec& v) {
    if (v.empty()) return 0.0;
    return std::sqrt(energy(v) / static_cast<double>(v.size()));
}

inline double max_abs_diff(const cvec& a, const cvec& b) {
    require(a.size() == b.size(), "max_abs_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Relative L2 distance ||a-b|| / ||b||.
inline double rel_l2_error(const cvec& a, const cvec& b) {
    require(a.size() == b.size(), "rel_l2_error: size mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

/// Scales a sequence to unit RMS.  This is the normalization used whenever
/// two modulator outputs with different gain conventions are compared.
inline cvec rms_normalize(const cvec& v) {
    const double r = rms(v);
    if (r == 0.0) return v;
    cvec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / r;
    return out;
}

}  // namespace aofdm
