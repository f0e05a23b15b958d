#include <doctest.h>

#include "aofdm/transforms.hpp"
#include "oracles.hpp"

using namespace aofdm;

TEST_SUITE_BEGIN("transforms");

TEST_CASE("dft impulse and constant") {
    cvec impulse = {1, 0, 0, 0};
    cvec flat = dft(impulse);
    for (const cplx& v : flat) CHECK(std::abs(v - cplx(1, 0)) < 1e-14);

    cvec ones = {1, 1, 1, 1};
    cvec dc = dft(ones);
    CHECK(std::abs(dc[0] - cplx(4, 0)) < 1e-13);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(dc[i]) < 1e-13);
}

TEST_CASE("dft matches direct summation oracle") {
    const cvec x = oracles::random_cvec(8, 11);
    const cvec got = dft(x);
    const cvec want = oracles::dft_bruteforce(x);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(std::abs(got[i] - want[i]) < 1e-12 * std::abs(want[i]) + 1e-12);

    // non power of two exercises the direct path
    const cvec y = oracles::random_cvec(12, 12);
    const cvec got2 = dft(y);
    const cvec want2 = oracles::dft_bruteforce(y);
    CHECK(max_abs_diff(got2, want2) < 1e-11);
}

TEST_CASE("idft round trip and oracle") {
    cvec x = {cplx(1, 2), cplx(-3, 0.5), cplx(0, -1), cplx(2, 2)};
    CHECK(max_abs_diff(idft(dft(x)), x) < 1e-12);

    cvec ones = {1, 1, 1, 1};
    const cvec pulse = idft(ones);
    CHECK(std::abs(pulse[0] - cplx(1, 0)) < 1e-14);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(pulse[i]) < 1e-14);

    const cvec r = oracles::random_cvec(16, 13);
    CHECK(max_abs_diff(idft(r), oracles::idft_bruteforce(r)) < 1e-12);
}

TEST_CASE("linear convolution basics and oracle") {
    CHECK(max_abs_diff(linear_convolve({1, 2}, {1}), {1, 2}) == 0.0);
    CHECK(max_abs_diff(linear_convolve({1, 1}, {1, 1}), {1, 2, 1}) == 0.0);

    const cvec a = oracles::random_cvec(6, 14);
    const cvec b = oracles::random_cvec(3, 15);
    CHECK(max_abs_diff(linear_convolve(a, b), oracles::linear_convolve_bruteforce(a, b)) <
          1e-13);
}

TEST_CASE("circular convolution basics, convolution theorem") {
    CHECK(max_abs_diff(circular_convolve({1, 2, 3, 4}, {1}), {1, 2, 3, 4}) == 0.0);
    CHECK(max_abs_diff(circular_convolve({1, 0, 0, 0}, {0, 1}), {0, 1, 0, 0}) == 0.0);

    const cvec a = oracles::random_cvec(8, 16);
    const cvec b = oracles::random_cvec(3, 17);
    const cvec circ = circular_convolve(a, b);
    cvec bt(8, cplx(0, 0));
    std::copy(b.begin(), b.end(), bt.begin());
    const cvec lhs = dft(circ);
    const cvec fa = dft(a);
    const cvec fb = dft(bt);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(std::abs(lhs[i] - fa[i] * fb[i]) < 1e-10);
}

TEST_CASE("error contracts") {
    CHECK_THROWS_AS(dft({}), std::invalid_argument);
    CHECK_THROWS_AS(idft({}), std::invalid_argument);
    CHECK_THROWS_AS(linear_convolve({}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(circular_convolve({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("Parseval up to N=1024") {
    for (std::size_t n : {5u, 64u, 1000u, 1024u}) {
        const cvec x = oracles::random_cvec(n, 100 + n);
        const cvec f = dft(x);
        const double lhs = energy(x);
        const double rhs = energy(f) / static_cast<double>(n);
        CHECK(std::abs(lhs - rhs) < 1e-10 * lhs);
    }
}

TEST_CASE("linearity of all four kernels") {
    const cplx alpha(0.7, -1.3), beta(-0.2, 0.4);
    const cvec a = oracles::random_cvec(16, 21);
    const cvec b = oracles::random_cvec(16, 22);
    const cvec k = oracles::random_cvec(5, 23);
    cvec mix(16);
    for (std::size_t i = 0; i < 16; ++i) mix[i] = alpha * a[i] + beta * b[i];

    auto check_linear = [&](auto&& f) {
        const cvec fa = f(a), fb = f(b), fm = f(mix);
        for (std::size_t i = 0; i < fm.size(); ++i)
            CHECK(std::abs(fm[i] - (alpha * fa[i] + beta * fb[i])) < 1e-10);
    };
    check_linear([](const cvec& v) { return dft(v); });
    check_linear([](const cvec& v) { return idft(v); });
    check_linear([&](const cvec& v) { return linear_convolve(v, k); });
    check_linear([&](const cvec& v) { return circular_convolve(v, k); });
}

TEST_CASE("circular equals tail of linear convolution on the periodic extension") {
    for (std::size_t n = 1; n <= 16; ++n) {
        for (std::size_t l = 1; l <= n; ++l) {
            const cvec a = oracles::random_cvec(n, 1000 + 31 * n + l);
            const cvec b = oracles::random_cvec(l, 2000 + 17 * n + l);
            cvec ext(a);
            ext.insert(ext.end(), a.begin(), a.end());
            const cvec lin = linear_convolve(ext, b);
            const cvec circ = circular_convolve(a, b);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(lin[n + i] - circ[i]) < 1e-12);
        }
    }
}

TEST_SUITE_END();
