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

enum class PrefixKind { Cp, Zp };

/// One prefixed block of N payload samples preceded by L guard samples.
/// CP guards repeat the payload tail; ZP guards are zeros.
struct PrefixedBlock {
    cvec samples;  // length N + L
    PrefixKind kind = PrefixKind::Cp;
    std::size_t prefix_len = 0;   // L
    std::size_t payload_len = 0;  // N
};

/// Cyclic prefix: copy the last L payload samples to the front.  The result
/// satisfies the periodic-extension identity samples[i] = payload[(i-L) mod N].
PrefixedBlock add_cp(const cvec& payload, std::size_t l);

/// Zero-padding prefix: L zeros followed by the payload.
PrefixedBlock add_zp(const cvec& payload, std::size_t l);

/// Drop the first L samples, keep the N that follow.
cvec remove_prefix(const cvec& received, std::size_t l, std::size_t n);

/// Receiver-side payload extraction from a convolved stream region.  For CP
/// the guard samples are simply discarded.  For ZP the channel tail of the
/// block spills into the following guard slot (which carries no other
/// signal); those up-to-L trailing samples are discarded from the stream
/// but folded back onto the head of the payload, which is what turns the
/// truncated linear convolution into an exact circular one.  `region` must
/// hold at least L + N samples starting at the guard; trailing fold samples
/// beyond the region are treated as zero.
cvec extract_payload(const cvec& region, PrefixKind kind, std::size_t l, std::size_t n);

/// Sends one prefixed block through a discrete channel and extracts the
/// payload; the result equals circular_convolve(payload, h) and this is
/// asserted internally (throws std::logic_error on mismatch).  The
/// equalizer and the tests share this code path.
cvec equivalent_circular_channel(const cvec& payload, const cvec& h, PrefixKind kind);

}  // namespace aofdm
