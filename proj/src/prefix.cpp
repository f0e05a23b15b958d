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

#include "aofdm/prefix.hpp"

#include "aofdm/transforms.hpp"

namespace aofdm {

PrefixedBlock add_cp(const cvec& payload, std::size_t l) {
    require(!payload.empty(), "add_cp: empty payload");
    require(l >= 1, "add_cp: prefix length must be >= 1");
    require(l <= payload.size(), "add_cp: prefix cannot exceed the block");
    PrefixedBlock b;
    b.kind = PrefixKind::Cp;
    b.prefix_len = l;
    b.payload_len = payload.size();
    b.samples.reserve(payload.size() + l);
    b.samples.insert(b.samples.end(), payload.end() - static_cast<std::ptrdiff_t>(l),
                     payload.end());
    b.samples.insert(b.samples.end(), payload.begin(), payload.end());
    return b;
}

PrefixedBlock add_zp(const cvec& payload, std::size_t l) {
    require(!payload.empty(), "add_zp: empty payload");
    require(l >= 1, "add_zp: prefix length must be >= 1");
    PrefixedBlock b;
    b.kind = PrefixKind::Zp;
    b.prefix_len = l;
    b.payload_len = payload.size();
    b.samples.assign(l, cplx(0.0, 0.0));
    b.samples.insert(b.samples.end(), payload.begin(), payload.end());
    return b;
}

cvec remove_prefix(const cvec& received, std::size_t l, std::size_t n) {
    require(received.size() >= n + l, "remove_prefix: input shorter than N + L");
    return cvec(received.begin() + static_cast<std::ptrdiff_t>(l),
                received.begin() + static_cast<std::ptrdiff_t>(l + n));
}

cvec extract_payload(const cvec& region, PrefixKind kind, std::size_t l, std::size_t n) {
    cvec payload = remove_prefix(region, l, n);
    if (kind == PrefixKind::Zp) {
        // Fold the tail spillover occupying the next guard slot back onto
        // the head; the slot holds only this block's ring-down.
        const std::size_t fold = std::min(l, n);
        for (std::size_t k = 0; k < fold; ++k) {
            const std::size_t idx = l + n + k;
            if (idx < region.size()) payload[k] += region[idx];
        }
    }
    return payload;
}

cvec equivalent_circular_channel(const cvec& payload, const cvec& h, PrefixKind kind) {
    require(h.size() <= payload.size(),
            "equivalent_circular_channel: channel longer than block");
    const std::size_t l = h.size();
    const std::size_t n = payload.size();
    const PrefixedBlock b =
        kind == PrefixKind::Cp ? add_cp(payload, l) : add_zp(payload, l);
    // Full linear convolution keeps the ring-down tail the ZP fold needs.
    const cvec received = linear_convolve(b.samples, h);
    cvec out = extract_payload(received, kind, l, n);

    const cvec reference = circular_convolve(payload, h);
    const double scale = std::max(1.0, rms(reference));
    if (max_abs_diff(out, reference) > 1e-10 * scale)
        throw std::logic_error(
            "equivalent_circular_channel: prefix discard did not reduce to a "
            "circular convolution");
    return out;
}

}  // namespace aofdm
