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

/// Unnormalized forward DFT: out[i] = sum_n x[n] e^{-j 2 pi i n / N}.
/// Radix-2 fast path for power-of-two N; the direct sum defines correctness.
cvec dft(const cvec& x);

/// Inverse DFT with 1/N: out[k] = (1/N) sum_n x[n] e^{+j 2 pi k n / N}.
cvec idft(const cvec& x);

/// Full linear convolution, output length len(a) + len(b) - 1.
cvec linear_convolve(const cvec& a, const cvec& b);

/// Circular convolution of a (length N) with b (length L <= N); b is
/// zero-padded to N: out[n] = sum_l b[l] a[(n-l) mod N].
cvec circular_convolve(const cvec& a, const cvec& b);

}  // namespace aofdm
