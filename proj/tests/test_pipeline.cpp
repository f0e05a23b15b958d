#include <doctest.h>

#include "aofdm/pipeline.hpp"
#include "aofdm/transforms.hpp"
#include "oracles.hpp"

using namespace aofdm;

TEST_SUITE_BEGIN("pipeline");

namespace {

std::vector<SymbolBlock> qpsk_blocks(std::size_t count, std::size_t n, double ts,
                                     std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SymbolBlock> blocks(count);
    for (std::size_t m = 0; m < count; ++m) {
        blocks[m].symbols = random_qpsk(n, rng);
        blocks[m].block_index = static_cast<int>(m);
        blocks[m].symbol_period = ts;
    }
    return blocks;
}

PipelineConfig base_config(SystemKind kind, int n, double ts,
                           Phi1Case c = Phi1Case::PhaseAligned,
                           Phi2Sign s = Phi2Sign::Plus) {
    PipelineConfig cfg;
    cfg.kind = kind;
    cfg.profile = {n, ts, c, s};
    return cfg;
}

ComplexSequence through_channel(const ComplexSequence& tx, const cvec& h) {
    ComplexSequence rx = tx;
    rx.samples = linear_convolve(tx.samples, h);
    return rx;
}

}  // namespace

TEST_CASE("transmit composition identities") {
    const auto blocks = qpsk_blocks(1, 16, 1e-6, 1);
    const auto cfg = base_config(SystemKind::ConventionalFft, 16, 1e-6);
    const ComplexSequence tx = transmit(cfg, blocks);
    CHECK(max_abs_diff(tx.samples, modulate_discrete(blocks[0])) == 0.0);

    // no prefix, two blocks: plain concatenation
    const auto two = qpsk_blocks(2, 16, 1e-6, 2);
    const ComplexSequence cat = transmit(cfg, two);
    REQUIRE(cat.size() == 32);
    cvec want = modulate_discrete(two[0]);
    const cvec second = modulate_discrete(two[1]);
    want.insert(want.end(), second.begin(), second.end());
    CHECK(max_abs_diff(cat.samples, want) == 0.0);

    auto ideal = base_config(SystemKind::RtftIdeal, 16, 1e-6);
    const ComplexSequence dtx = transmit(ideal, blocks);
    CHECK(max_abs_diff(dtx.samples, rtft_ofdm_discrete(blocks[0])) < 1e-10);
}

TEST_CASE("mismatched block size is rejected") {
    auto blocks = qpsk_blocks(2, 16, 1e-6, 3);
    blocks[1].symbols.pop_back();
    const auto cfg = base_config(SystemKind::ConventionalFft, 16, 1e-6);
    CHECK_THROWS_AS(transmit(cfg, blocks), std::invalid_argument);
}

TEST_CASE("ideal-channel recovery for every window case and dispersion sign") {
    const std::size_t n = 64;
    for (auto c : {Phi1Case::ZeroStart, Phi1Case::PhaseAligned}) {
        for (auto s : {Phi2Sign::Plus, Phi2Sign::Minus}) {
            const auto cfg = base_config(SystemKind::RtftIdeal, n, 1e-6, c, s);
            const auto blocks = qpsk_blocks(2, n, 1e-6, 4);
            const ComplexSequence tx = transmit(cfg, blocks);
            const RunReport rep = receive(cfg, tx, std::nullopt, &blocks);
            CHECK(rep.max_abs_error < 1e-9);
        }
    }
}

TEST_CASE("zero-start recovery needs the alternating-sign compensation") {
    const std::size_t n = 64;
    auto cfg = base_config(SystemKind::RtftIdeal, n, 1e-6, Phi1Case::ZeroStart);
    const auto blocks = qpsk_blocks(1, n, 1e-6, 5);
    const ComplexSequence tx = transmit(cfg, blocks);

    const RunReport good = receive(cfg, tx, std::nullopt, &blocks);
    CHECK(good.max_abs_error < 1e-9);

    cfg.compensate_zero_start = false;
    const RunReport bad = receive(cfg, tx, std::nullopt, &blocks);
    double min_mag = 1e300;
    for (const cplx& x : blocks[0].symbols) min_mag = std::min(min_mag, std::abs(x));
    CHECK(bad.max_abs_error >= 2.0 * min_mag);
}

TEST_CASE("conventional and dispersive receivers agree through an ideal channel") {
    const std::size_t n = 32;
    const auto blocks = qpsk_blocks(1, n, 1e-6, 6);
    const auto conv = base_config(SystemKind::ConventionalFft, n, 1e-6);
    const auto disp = base_config(SystemKind::RtftIdeal, n, 1e-6);
    const RunReport a = receive(conv, transmit(conv, blocks), std::nullopt, &blocks);
    const RunReport b = receive(disp, transmit(disp, blocks), std::nullopt, &blocks);
    CHECK(max_abs_diff(a.recovered_blocks[0].symbols, b.recovered_blocks[0].symbols) <
          1e-9);
}

TEST_CASE("multipath recovery with zero padding and known taps") {
    const std::size_t n = 64, l = 10;
    RicianSpec spec{1.0, 0.4, static_cast<int>(l), 0.0, 1e-6, {}};
    for (auto sign : {Phi2Sign::Plus, Phi2Sign::Minus}) {
        auto cfg = base_config(SystemKind::RtftIdeal, n, 1e-6,
                               Phi1Case::PhaseAligned, sign);
        cfg.prefix = {true, PrefixKind::Zp, l};
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const cvec h = sample_channel(seed, spec).discrete_gains();
            const auto blocks = qpsk_blocks(3, n, 1e-6, 100 + seed);
            const ComplexSequence rx = through_channel(transmit(cfg, blocks), h);
            const RunReport rep = receive(cfg, rx, h, &blocks);
            CHECK(rep.max_abs_error < 1e-6);
            CHECK(rep.evm_rms < 1e-6);
        }
    }
}

TEST_CASE("odd block sizes run through the full chain") {
    // the half-block-shift equivalence is an even-N statement, but the
    // operators and the transceiver accept odd N
    const std::size_t n = 7;
    for (auto c : {Phi1Case::ZeroStart, Phi1Case::PhaseAligned}) {
        auto cfg = base_config(SystemKind::RtftIdeal, n, 1e-6, c);
        const auto blocks = qpsk_blocks(2, n, 1e-6, 21);
        const RunReport rep = receive(cfg, transmit(cfg, blocks), std::nullopt, &blocks);
        CHECK(rep.max_abs_error < 1e-9);
    }
    SymbolBlock b;
    b.symbols = {1, 0, 0, 0, 0};
    b.symbol_period = 1e-6;
    CHECK(rtft_ofdm_discrete(b).size() == 5);
}

TEST_CASE("conventional cyclic-prefix system equalizes to H X") {
    const std::size_t n = 64, l = 10;
    auto cfg = base_config(SystemKind::ConventionalFft, n, 1e-6);
    cfg.prefix = {true, PrefixKind::Cp, l};
    const cvec h = sample_channel(3, RicianSpec{1.0, 0.4, 10, 0.0, 1e-6, {}}).discrete_gains();
    const auto blocks = qpsk_blocks(2, n, 1e-6, 7);

    const ComplexSequence rx = through_channel(transmit(cfg, blocks), h);

    // uncorrected receive: transform only
    const RunReport raw = receive(cfg, rx, std::nullopt, nullptr);
    cvec padded(n, cplx(0, 0));
    std::copy(h.begin(), h.end(), padded.begin());
    const cvec hf = dft(padded);
    for (std::size_t m = 0; m < 2; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            const cplx want = hf[i] * blocks[m].symbols[i];
            CHECK(std::abs(raw.recovered_blocks[m].symbols[i] - want) < 1e-10);
        }
    }

    // equalized receive recovers the symbols
    const RunReport eq = receive(cfg, rx, h, &blocks);
    CHECK(eq.max_abs_error < 1e-10);
}

TEST_CASE("without a prefix the leading samples of later blocks carry the interference") {
    const std::size_t n = 64, l = 10;
    auto cfg = base_config(SystemKind::RtftIdeal, n, 1e-6);
    const cvec h = sample_channel(11, RicianSpec{1.0, 0.4, 10, 0.0, 1e-6, {}}).discrete_gains();
    const auto blocks = qpsk_blocks(2, n, 1e-6, 8);
    const ComplexSequence rx = through_channel(transmit(cfg, blocks), h);

    // compare block 1's received time samples against the interference-free
    // circular reference
    const cvec x1(rx.samples.begin() + n, rx.samples.begin() + 2 * n);
    const cvec tx1 = rtft_ofdm_discrete(blocks[1]);
    const cvec clean = oracles::circular_convolve_bruteforce(tx1, h);
    double head = 0.0, tail = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = std::abs(x1[k] - clean[k]);
        if (k < l)
            head += e;
        else
            tail += e;
    }
    CHECK(head / static_cast<double>(l) > tail / static_cast<double>(n - l) + 1e-6);
}

TEST_CASE("equalizer floor reports singular bins") {
    const std::size_t n = 16;
    auto cfg = base_config(SystemKind::ConventionalFft, n, 1e-6);
    cfg.prefix = {true, PrefixKind::Cp, 2};
    const cvec h = {cplx(1, 0), cplx(-1, 0)};  // null at DC
    const auto blocks = qpsk_blocks(1, n, 1e-6, 9);
    const ComplexSequence rx = through_channel(transmit(cfg, blocks), h);
    CHECK_THROWS_WITH_AS(receive(cfg, rx, h, &blocks), doctest::Contains("bins 0"),
                         std::runtime_error);
}

TEST_CASE("physical chain pipeline, ideal channel") {
    const std::size_t n = 8;
    auto cfg = base_config(SystemKind::RtftPhysical, n, 1.0);
    cfg.oversampling = 64;
    const auto blocks = qpsk_blocks(1, n, 1.0, 10);
    const ComplexSequence tx = transmit(cfg, blocks);
    CHECK(tx.size() == n * 64);
    const RunReport rep = receive(cfg, tx, std::nullopt, &blocks);
    CHECK(rep.max_abs_error < 1e-2);
}

TEST_CASE("physical chain pipeline through a short multipath channel") {
    const std::size_t n = 8, l = 2;
    auto cfg = base_config(SystemKind::RtftPhysical, n, 1.0);
    cfg.oversampling = 64;
    cfg.prefix = {true, PrefixKind::Zp, l};
    const auto blocks = qpsk_blocks(1, n, 1.0, 11);
    const ComplexSequence tx = transmit(cfg, blocks);

    ChannelRealization ch;
    ch.taps = {{cplx(1.0, 0.0), 0.0}, {std::polar(0.4, 1.1), 1.0}};
    const ComplexSequence rx = apply_continuous(tx, ch);
    const RunReport rep = receive(cfg, rx, ch.discrete_gains(), &blocks);
    CHECK(rep.max_abs_error < 5e-2);
}

TEST_CASE("single-carrier distortion formula") {
    const double ts = 1e-6;
    CHECK(isi_distortion_wsc(0.0, ts) == 0.0);
    CHECK(isi_distortion_wsc(ts / 2.0, ts) == doctest::Approx(2.0));

    // direct waveform-difference evaluation with unit symbols
    const double fs = 1.0 / ts;
    for (double frac : {0.05, 0.15, 0.3, 0.45}) {
        const double dtau = frac * ts;
        const int nsym = 3;
        const double tn = static_cast<double>(nsym) * ts;  // LoS-aligned clock
        const double direct = std::abs(std::cos(kTwoPi * fs * tn) -
                                       std::cos(kTwoPi * fs * (tn - dtau)));
        CHECK(std::abs(isi_distortion_wsc(dtau, ts) - direct) < 1e-10);
    }
}

TEST_CASE("subcarrier distortion formula") {
    const double ts = 1e-6;
    const int n_total = 64;
    const double an = 1.0 / 8.0;
    CHECK(isi_distortion_ofdm(0, n_total, 0.3e-6, ts, an) == 0.0);
    CHECK(isi_distortion_ofdm(n_total, n_total, 0.3e-6, ts, an) ==
          doctest::Approx(an * isi_distortion_wsc(0.3e-6, ts)));

    // direct evaluation on subcarrier n = 16 with unit symbols
    const int n = 16;
    const double t0 = n_total * ts;
    const double fn = static_cast<double>(n) / t0;
    const double dtau = 0.3 * ts;
    const int m = 2;
    const double tm = static_cast<double>(m) * t0;
    const double direct = an * std::abs(std::cos(kTwoPi * fn * tm) -
                                        std::cos(kTwoPi * fn * (tm - dtau)));
    CHECK(std::abs(isi_distortion_ofdm(n, n_total, dtau, ts, an) - direct) < 1e-10);
}

TEST_CASE("wideband distortion dominates in the monotone regime") {
    const double ts = 1e-6;
    const int n_total = 64;
    const double an = 1.0 / 8.0;
    for (int i = 1; i <= 100; ++i) {
        const double dtau = 0.5 * ts * static_cast<double>(i) / 100.0;
        for (int n = 0; n < n_total; ++n) {
            CHECK(isi_distortion_wsc(dtau, ts) >
                  isi_distortion_ofdm(n, n_total, dtau, ts, an));
        }
    }
}

TEST_CASE("error vector magnitude") {
    Rng rng(12);
    SymbolBlock truth;
    truth.symbols = random_qpsk(32, rng);
    truth.symbol_period = 1e-6;
    CHECK(evm(truth, truth) == 0.0);

    SymbolBlock scaled = truth;
    for (auto& v : scaled.symbols) v *= 1.05;
    CHECK(evm(scaled, truth) == doctest::Approx(0.05).epsilon(1e-9));

    SymbolBlock bumped = truth;
    double num = 0.0, den = 0.0;
    Rng rng2(13);
    for (std::size_t i = 0; i < bumped.symbols.size(); ++i) {
        const cplx d(0.01 * rng2.normal(), 0.01 * rng2.normal());
        bumped.symbols[i] += d;
        num += std::norm(d);
        den += std::norm(truth.symbols[i]);
    }
    CHECK(evm(bumped, truth) == doctest::Approx(std::sqrt(num / den)).epsilon(1e-12));

    SymbolBlock wrong;
    wrong.symbols = random_qpsk(16, rng);
    CHECK_THROWS_AS(evm(wrong, truth), std::invalid_argument);
}

TEST_SUITE_END();
