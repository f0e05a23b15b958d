// Independent reference implementations used as test oracles.  Everything
// here is written the slow, obvious way and must stay decoupled from the
// library code paths it checks.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "aofdm/rng.hpp"
#include "aofdm/types.hpp"

namespace oracles {

using aofdm::cplx;
using aofdm::cvec;

// Plain double-loop DFT, no tables, no index reduction.
inline cvec dft_bruteforce(const cvec& x) {
    const std::size_t n = x.size();
    cvec out(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double ang = -2.0 * aofdm::kPi * static_cast<double>(i) *
                               static_cast<double>(k) / static_cast<double>(n);
            out[i] += x[k] * cplx(std::cos(ang), std::sin(ang));
        }
    return out;
}

inline cvec idft_bruteforce(const cvec& x) {
    const std::size_t n = x.size();
    cvec out(n, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
            const double ang = 2.0 * aofdm::kPi * static_cast<double>(k) *
                               static_cast<double>(m) / static_cast<double>(n);
            out[k] += x[m] * cplx(std::cos(ang), std::sin(ang));
        }
        out[k] /= static_cast<double>(n);
    }
    return out;
}

inline cvec linear_convolve_bruteforce(const cvec& a, const cvec& b) {
    cvec out(a.size() + b.size() - 1, cplx(0.0, 0.0));
    for (std::size_t n = 0; n < out.size(); ++n)
        for (std::size_t l = 0; l < b.size(); ++l) {
            if (n < l) continue;
            const std::size_t k = n - l;
            if (k >= a.size()) continue;
            out[n] += b[l] * a[k];
        }
    return out;
}

inline cvec circular_convolve_bruteforce(const cvec& a, const cvec& b) {
    const std::size_t n = a.size();
    cvec bt(n, cplx(0.0, 0.0));
    for (std::size_t l = 0; l < b.size(); ++l) bt[l] = b[l];
    cvec out(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            out[i] += bt[l] * a[(i + n - l) % n];
    return out;
}

// Adaptive Simpson quadrature.
inline double simpson_step(const std::function<double(double)>& f, double a, double b,
                           double fa, double fm, double fb, double whole, double eps,
                           int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-10) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, eps, 40);
}

// Central finite difference.
inline double derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline cvec random_cvec(std::size_t n, std::uint64_t seed) {
    aofdm::Rng rng(seed);
    return aofdm::random_gaussian(n, rng);
}

inline cvec circular_shift(const cvec& v, std::size_t k) {
    const std::size_t n = v.size();
    cvec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[(i + k) % n];
    return out;
}

// Tabulated CDF built by cumulative trapezoid integration of a density.
struct TabulatedCdf {
    double r_max = 0.0;
    double dr = 0.0;
    std::vector<double> values;

    double operator()(double r) const {
        if (r <= 0.0) return 0.0;
        if (r >= r_max) return values.back();
        const double pos = r / dr;
        const auto i = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i);
        return values[i] + frac * (values[i + 1] - values[i]);
    }
};

inline TabulatedCdf tabulate_cdf(const std::function<double(double)>& pdf, double r_max,
                                 std::size_t points = 200000) {
    TabulatedCdf cdf;
    cdf.r_max = r_max;
    cdf.dr = r_max / static_cast<double>(points);
    cdf.values.resize(points + 1);
    cdf.values[0] = 0.0;
    double prev = pdf(0.0);
    for (std::size_t i = 1; i <= points; ++i) {
        const double cur = pdf(static_cast<double>(i) * cdf.dr);
        cdf.values[i] = cdf.values[i - 1] + 0.5 * (prev + cur) * cdf.dr;
        prev = cur;
    }
    return cdf;
}

// Two-sided Kolmogorov-Smirnov statistic of draws against a reference CDF.
inline double ks_statistic(std::vector<double> draws,
                           const std::function<double(double)>& cdf) {
    std::sort(draws.begin(), draws.end());
    const double n = static_cast<double>(draws.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < draws.size(); ++i) {
        const double f = cdf(draws[i]);
        worst = std::max(worst, std::abs(f - static_cast<double>(i) / n));
        worst = std::max(worst, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return worst;
}

}  // namespace oracles
