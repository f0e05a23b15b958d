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

#include "aofdm/rng.hpp"

namespace aofdm {

cvec random_qpsk(std::size_t n, Rng& rng) {
    static const double a = 1.0 / std::sqrt(2.0);
    cvec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bits = rng.raw();
        out[i] = cplx((bits & 1) ? a : -a, (bits & 2) ? a : -a);
    }
    return out;
}

cvec random_gaussian(std::size_t n, Rng& rng) {
    cvec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        out[i] = cplx(re, im);
    }
    return out;
}

}  // namespace aofdm
