#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/rs_coeffs.hpp"

namespace zetalab {

// Riemann-Siegel theta evaluation record.
struct ThetaValue {
    double t;
    double theta;
    int series_order;  // asymptotic correction terms used (0: Stirling path)
};

namespace detail {

using cplx = std::complex<double>;

// Stirling series coefficients B_{2n} / (2n (2n-1)).
inline constexpr std::array<double, 7> stirling_a = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
    -691.0 / 360360, 1.0 / 156,
};

// Im log Gamma(1/4 + i t/2) for t >= 0, via upward recurrence until the
// argument is large enough for the Stirling series.
inline double im_log_gamma_quarter(double t) {
    const double y = 0.5 * t;
    double x = 0.25;
    double rec = 0.0;
    int shifts = (std::sqrt(x * x + y * y) < 12.0) ? 12 : 0;
    for (int k = 0; k < shifts; ++k) rec += std::atan2(y, x + k);
    x += shifts;
    const double r2 = x * x + y * y;
    const double phi = std::atan2(y, x);
    double im = (x - 0.5) * phi + 0.5 * y * std::log(r2) - y;
    cplx w(x, y);
    cplx inv = 1.0 / w;
    cplx inv2 = inv * inv;
    cplx p = inv;
    for (double a : stirling_a) {
        im += a * p.imag();
        p *= inv2;
    }
    return im - rec;
}

// theta asymptotic tail coefficients: 1/(48t) + 7/(5760 t^3) + ...
inline constexpr std::array<double, 5> theta_c = {
    1.0 / 48, 7.0 / 5760, 31.0 / 80640, 127.0 / 430080, 511.0 / 1216512,
};

inline double theta_series(double t) {
    double v = 0.5 * t * std::log(t / two_pi) - 0.5 * t - pi / 8;
    double inv2 = 1.0 / (t * t);
    double p = 1.0 / t;
    for (double c : theta_c) {
        v += c * p;
        p *= inv2;
    }
    return v;
}

// theta valid for all t >= 0 (hardy_z and S1 need it below 2).
inline double theta_raw(double t) {
    if (t >= 10.0) return theta_series(t);
    return im_log_gamma_quarter(t) - 0.5 * t * std::log(pi);
}

// log n and 1/sqrt(n) lookup tables for the zeta main sums.  Fixed
// precomputation (contents independent of call history); covers the
// Riemann-Siegel main sum up to t ~ 1.2e7.
inline constexpr int zeta_table_size = 1400;

inline const std::array<double, zeta_table_size>& log_table() {
    static const auto table = [] {
        std::array<double, zeta_table_size> a{};
        for (int n = 1; n < zeta_table_size; ++n) a[n] = std::log(double(n));
        return a;
    }();
    return table;
}

inline const std::array<double, zeta_table_size>& inv_sqrt_table() {
    static const auto table = [] {
        std::array<double, zeta_table_size> a{};
        for (int n = 1; n < zeta_table_size; ++n)
            a[n] = 1.0 / std::sqrt(double(n));
        return a;
    }();
    return table;
}

// B_{2k} / (2k)! for the Euler-Maclaurin tail.
inline constexpr std::array<double, 10> em_c = {
    1.0 / 12,
    -1.0 / 720,
    1.0 / 30240,
    -1.0 / 1209600,
    1.0 / 47900160,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
};

// zeta(1/2 + it) by Euler-Maclaurin summation; used below the
// Riemann-Siegel crossover.
inline cplx zeta_euler_maclaurin(double t) {
    const cplx s(0.5, t);
    const int N = std::max(40, int(std::ceil(1.3 * t)) + 1);
    const auto& logs = log_table();
    const auto& isq = inv_sqrt_table();
    kahan_sum re, im;
    for (int n = 1; n < N; ++n) {
        double ln = n < zeta_table_size ? logs[n] : std::log(double(n));
        double w = n < zeta_table_size ? isq[n] : 1.0 / std::sqrt(double(n));
        double phase = t * ln;
        re += w * std::cos(phase);
        im += -w * std::sin(phase);
    }
    cplx acc(re.value(), im.value());
    const double lnN = std::log(double(N));
    const cplx Nms = std::polar(1.0 / std::sqrt(double(N)), -t * lnN);
    acc += 0.5 * Nms;
    acc += Nms * double(N) / (s - 1.0);
    const cplx invN2 = cplx(1.0, 0.0) / (double(N) * double(N));
    cplx term = em_c[0] * s * Nms / double(N);
    acc += term;
    cplx poch = s;
    for (std::size_t k = 1; k < em_c.size(); ++k) {
        poch = (s + double(2 * k - 1)) * (s + double(2 * k));
        term *= (em_c[k] / em_c[k - 1]) * poch * invN2;
        acc += term;
        if (std::abs(term) < 1e-18) break;
    }
    return acc;
}

// Riemann-Siegel formula with correction terms C0..C4 (Chebyshev tables in
// rs_coeffs.hpp); abs error < ~1e-9 for t >= 500.
inline double hardy_z_rs(double t) {
    const double a = std::sqrt(t / two_pi);
    const int N = int(a);
    const double p = a - N;
    const double theta = theta_series(t);
    const auto& logs = log_table();
    const auto& isq = inv_sqrt_table();
    kahan_sum main;
    if (N < zeta_table_size) {
        for (int n = 1; n <= N; ++n)
            main += isq[n] * std::cos(theta - t * logs[n]);
    } else {
        for (int n = 1; n <= N; ++n)
            main += std::cos(theta - t * std::log(double(n))) /
                    std::sqrt(double(n));
    }
    const double z = 2.0 * p - 1.0;
    const double tau = std::sqrt(two_pi / t);
    double corr = cheb_eval(rs_c4_cheb, z);
    corr = cheb_eval(rs_c3_cheb, z) + tau * corr;
    corr = cheb_eval(rs_c2_cheb, z) + tau * corr;
    corr = cheb_eval(rs_c1_cheb, z) + tau * corr;
    corr = cheb_eval(rs_c0_cheb, z) + tau * corr;
    const double parity = (N % 2 == 1) ? 1.0 : -1.0;  // (-1)^(N-1)
    return 2.0 * main.value() + parity * std::sqrt(tau) * corr;
}

inline constexpr double hardy_rs_crossover = 500.0;

// psi(w) asymptotic coefficients B_{2n} / (2n).
inline constexpr std::array<double, 6> digamma_b = {
    1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760,
};

}  // namespace detail

// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
// Asymptotic series for t >= 10 (5 correction terms), Stirling-with-
// recurrence below.  Absolute error is a few ulp of theta(t)
// (<= ~1e-12 + eps*|theta|).
inline ThetaValue rs_theta_detail(double t) {
    if (!(t >= 2.0)) throw domain_error("rs_theta: requires t >= 2");
    if (t >= 10.0) return {t, detail::theta_series(t), 5};
    return {t, detail::theta_raw(t), 0};
}

inline double rs_theta(double t) { return rs_theta_detail(t).theta; }

// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
// Euler-Maclaurin below t = 500, Riemann-Siegel (C0..C4) above;
// abs error <= ~1e-8 for t <= 1e6.
inline double hardy_z(double t) {
    if (!(t >= 0.0)) throw domain_error("hardy_z: requires t >= 0");
    if (t >= detail::hardy_rs_crossover) return detail::hardy_z_rs(t);
    const std::complex<double> zeta = detail::zeta_euler_maclaurin(t);
    const double theta = detail::theta_raw(t);
    return std::cos(theta) * zeta.real() - std::sin(theta) * zeta.imag();
}

// Re psi(1/4 + iu/2); even in u, abs error <= ~1e-13.
inline double digamma_re_quarter(double u) {
    const double y = 0.5 * std::abs(u);
    double x = 0.25;
    double rec = 0.0;
    int shifts = (std::sqrt(x * x + y * y) < 12.0) ? 12 : 0;
    for (int k = 0; k < shifts; ++k) {
        double xk = x + k;
        rec += xk / (xk * xk + y * y);
    }
    x += shifts;
    const double r2 = x * x + y * y;
    double re = 0.5 * std::log(r2) - 0.5 * x / r2;
    std::complex<double> w(x, y);
    std::complex<double> inv2 = 1.0 / (w * w);
    std::complex<double> p = inv2;
    for (double b : detail::digamma_b) {
        re -= b * p.real();
        p *= inv2;
    }
    return re - rec;
}

}  // namespace zetalab
