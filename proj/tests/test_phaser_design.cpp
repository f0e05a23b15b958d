#include <doctest.h>

#include "aofdm/phaser_design.hpp"
#include "aofdm/rtft.hpp"

using namespace aofdm;

TEST_SUITE_BEGIN("phaser_design");

TEST_CASE("transmitter parameters for the canonical designs") {
    OfdmProfile p{64, 1e-9, Phi1Case::PhaseAligned, Phi2Sign::Plus};
    const PhaserParams tx = tx_params(p);
    CHECK(tx.phi2 == doctest::Approx(1.0185916357881302e-17).epsilon(1e-12));
    CHECK(tx.phi1 == doctest::Approx(-6.4e-8).epsilon(1e-14));
    CHECK(tx.phi0 == 0.0);

    OfdmProfile q{4, 1e-6, Phi1Case::ZeroStart, Phi2Sign::Plus};
    CHECK(tx_params(q).phi1 == doctest::Approx(-2e-6).epsilon(1e-14));

    OfdmProfile minus = p;
    minus.phi2_sign = Phi2Sign::Minus;
    CHECK(std::abs(tx_params(minus).phi2) == std::abs(tx.phi2));
    CHECK(tx_params(minus).phi2 < 0.0);

    OfdmProfile zero = p;
    zero.phi1_case = Phi1Case::ZeroStart;
    CHECK(std::abs(tx_params(zero).phi2) == std::abs(tx.phi2));

    // causality: the output window never starts before zero
    for (auto c : {Phi1Case::ZeroStart, Phi1Case::PhaseAligned}) {
        OfdmProfile r{16, 1e-6, c, Phi2Sign::Plus};
        CHECK(tx_params(r).phi1 <= -r.block_duration() / 2.0);
    }
}

TEST_CASE("receiver pairing inverts the dispersion") {
    OfdmProfile p{64, 1e-9, Phi1Case::PhaseAligned, Phi2Sign::Plus};
    const PhaserParams tx = tx_params(p);
    const PhaserParams rx = rx_params(tx);
    CHECK(rx.phi2 == -tx.phi2);
    CHECK(rx.phi1 == 0.0);
    CHECK(rx.omega_c == tx.omega_c);
    CHECK(rx_params(rx_params(tx)).phi2 == tx.phi2);
}

TEST_CASE("mapped output window spans exactly one block") {
    for (auto c : {Phi1Case::ZeroStart, Phi1Case::PhaseAligned}) {
        OfdmProfile p{32, 2e-6, c, Phi2Sign::Plus};
        const PhaserParams tx = tx_params(p);
        const OutputWindow w = output_window(tx.mapping(), p.ts);
        const double t0 = p.block_duration();
        CHECK(w.width() == doctest::Approx(t0).epsilon(1e-12));
        if (c == Phi1Case::ZeroStart) {
            CHECK(w.t_min == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(w.t_max == doctest::Approx(t0));
        } else {
            CHECK(w.t_min == doctest::Approx(t0 / 2.0));
            CHECK(w.t_max == doctest::Approx(1.5 * t0));
        }
    }
}

TEST_CASE("feasibility arithmetic") {
    OfdmProfile tiny{1, 1e-9, Phi1Case::PhaseAligned, Phi2Sign::Plus};
    const FeasibilityReport small = feasibility(tiny, 1e9, 1e-18, 1e-7);
    CHECK(small.phi2_magnitude == doctest::Approx(1.5915494309189535e-19));
    CHECK(small.practical);

    OfdmProfile wide{64, 1e-6, Phi1Case::PhaseAligned, Phi2Sign::Plus};
    const FeasibilityReport big = feasibility(wide, 1e9);
    CHECK(big.phi2_magnitude == doctest::Approx(1.0185916357881302e-11));
    CHECK_FALSE(big.practical);
    CHECK_FALSE(big.notes.empty());

    // delay swing over 1 GHz at 1e-18 s^2/rad dispersion
    OfdmProfile unit{1, 1e-9, Phi1Case::PhaseAligned, Phi2Sign::Plus};
    FeasibilityReport r = feasibility(unit, 1e9);
    const double swing_rate = r.delay_swing / r.phi2_magnitude;  // 2 pi * bandwidth
    CHECK(swing_rate * 1e-18 == doctest::Approx(6.283185307179586e-9));
}

TEST_CASE("default thresholds accept the nanosecond design and reject microseconds") {
    OfdmProfile ns{64, 1e-9, Phi1Case::PhaseAligned, Phi2Sign::Plus};
    CHECK(feasibility(ns, 1e9).practical);
    OfdmProfile us{64, 1e-6, Phi1Case::PhaseAligned, Phi2Sign::Plus};
    CHECK_FALSE(feasibility(us, 1e9).practical);
}

TEST_CASE("band presets") {
    CHECK(band_presets().size() == 4);
    for (const char* name : {"sub6", "28ghz", "60ghz", "thz"})
        CHECK(find_band_preset(name) != nullptr);
    CHECK(find_band_preset("fm-radio") == nullptr);
    CHECK(find_band_preset("28ghz")->ts_max == doctest::Approx(1e-9));
}

TEST_SUITE_END();
