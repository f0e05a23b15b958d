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
#include <random>

#include "aofdm/types.hpp"

namespace aofdm {

/// Seeded, portable random source.  mt19937_64 output is bit-identical
/// across platforms and the distributions are hand-rolled (Box-Muller,
/// fixed-point uniforms) instead of the unspecified std:: distributions,
/// so the same seed yields the same channel realization everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on (0, 1).
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
    }

    /// Uniform on (0, 2*pi).
    double uniform_angle() { return uniform01() * kTwoPi; }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = kTwoPi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Random QPSK symbols, points (+-1 +-j)/sqrt(2).
cvec random_qpsk(std::size_t n, Rng& rng);

/// Random complex symbols with independent standard-normal parts.
cvec random_gaussian(std::size_t n, Rng& rng);

}  // namespace aofdm
