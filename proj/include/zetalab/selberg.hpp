#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"

namespace zetalab {

// Parameters of the extremal majorant/minorant of chi_[-L, L] with band
// limit delta: F+ >= chi >= F-, masses 2L +- 1/delta, Fourier transform
// supported in [-delta, delta].
struct SelbergParams {
    double L;
    double delta;
    enum sign_t { plus, minus } sign = plus;

    void validate() const {
        if (!(L > 0.0) || !(delta > 0.0))
            throw domain_error("SelbergParams: L and delta must be positive");
    }
};

namespace detail {

// Empirical envelope constants for the construction (measured once over
// the (L, delta) grid in the module tests and asserted stable there).
inline constexpr double selberg_growth_c = 4.0;   // |F(w)| <= c e^{2 pi d |Im w|}
inline constexpr double selberg_decay_c = 0.2;    // F(u) d^2 (|u|-L)^2 <= c
inline constexpr double selberg_sup = 1.5;        // sup |F| on the real line

template <class T>
T sinc_sq(T w) {
    // (sin pi w / (pi w))^2 with the small-argument Taylor branch.
    if (std::abs(w) < 1e-4) {
        T w2 = pi * pi * w * w;
        T s = 1.0 - w2 / 6.0 * (1.0 - w2 / 20.0 * (1.0 - w2 / 42.0));
        return s * s;
    }
    T s = std::sin(pi * w) / (pi * w);
    return s * s;
}

// trigamma asymptotic: psi'(w) ~ 1/w + 1/(2w^2) + 1/(6w^3) - 1/(30w^5) + ...
// valid here for Re w >= 50.
template <class T>
T trigamma_asym(T w) {
    T i = T(1.0) / w;
    T i2 = i * i;
    return i + 0.5 * i2 + i * i2 * (1.0 / 6.0 + i2 * (-1.0 / 30.0 + i2 * (1.0 / 42.0)));
}

// E(v) = B(v) - 1 for Re v >= 60 via the tail expansion
// (sin pi v / pi)^2 (1/v^2 - 1/(3v^3) + 1/(15v^5) - 1/(21v^7)).
template <class T>
T beurling_tail(T v, T sin_sq_over_pi2) {
    T i = T(1.0) / v;
    T i2 = i * i;
    return sin_sq_over_pi2 * i2 *
           (1.0 + i * (-1.0 / 3.0 + i2 * (1.0 / 15.0 - i2 / 21.0)));
}

template <class T>
T sin_pi_reduced_sq(T z, double nearest) {
    // (sin pi z)^2 / pi^2 computed from the reduced argument z - nearest;
    // exact for integer shifts, avoids argument-reduction loss at large z.
    T r = z - nearest;
    T s = std::sin(pi * r) / pi;
    return s * s;
}

template <class T>
T beurling_b_impl(T z, double re) {
    const double nearest = std::round(re);
    const T s2 = sin_pi_reduced_sq(z, nearest);
    if (re >= 60.0) return T(1.0) + beurling_tail(z, s2);
    if (re <= -60.0) {
        // B(z) + B(-z) = 2 (sin pi z / (pi z))^2
        T mz = -z;
        return 2.0 * s2 / (z * z) - (T(1.0) + beurling_tail(mz, s2));
    }
    // series: (sin pi z/pi)^2 (sum_{n>=0} (z-n)^{-2} - sum_{n>=1} (z+n)^{-2}
    //          + 2/z), truncated at M with trigamma tails.
    const double az = std::abs(z);
    const int M = int(std::ceil(50.0 + az)) + 1;
    T acc(0.0);
    for (int n = 0; n < M; ++n) {
        T d = z - double(n);
        if (std::abs(d) < 1e-4)
            acc += sinc_sq(d);
        else
            acc += s2 / (d * d);
    }
    for (int n = 1; n < M; ++n) {
        T d = z + double(n);
        if (std::abs(d) < 1e-4)
            acc -= sinc_sq(d);
        else
            acc -= s2 / (d * d);
    }
    if (std::abs(z) < 1e-4)
        acc += 2.0 * z * sinc_sq(z);
    else
        acc += s2 * 2.0 / z;
    acc += s2 * (trigamma_asym(T(double(M)) - z) -
                 trigamma_asym(T(double(M)) + z));
    return acc;
}

}  // namespace detail

// Beurling's entire majorant of sgn: B(x) >= sgn(x) on the real line,
// B(n) = sgn(n) for integer n != 0, B(0) = 1, integral of B - sgn is 1.
inline double beurling_b(double x) {
    return detail::beurling_b_impl<double>(x, x);
}

inline std::complex<double> beurling_b(std::complex<double> z) {
    return detail::beurling_b_impl<std::complex<double>>(z, z.real());
}

// F+(u) =  (B(d(u+L)) + B(d(L-u))) / 2
// F-(u) = -(B(-d(u+L)) + B(-d(L-u))) / 2
inline double extremal_eval(const SelbergParams& p, double u) {
    p.validate();
    const double a = p.delta * (u + p.L);
    const double b = p.delta * (p.L - u);
    if (p.sign == SelbergParams::plus)
        return 0.5 * (beurling_b(a) + beurling_b(b));
    return -0.5 * (beurling_b(-a) + beurling_b(-b));
}

inline std::complex<double> extremal_eval_complex(const SelbergParams& p,
                                                  std::complex<double> w) {
    p.validate();
    if (std::abs(w.imag()) > 1.0 + 1e-12)
        throw domain_error("extremal_eval_complex: |Im w| <= 1 required");
    const std::complex<double> a = p.delta * (w + p.L);
    const std::complex<double> b = p.delta * (p.L - w);
    std::complex<double> v;
    if (p.sign == SelbergParams::plus)
        v = 0.5 * (beurling_b(a) + beurling_b(b));
    else
        v = -0.5 * (beurling_b(-a) + beurling_b(-b));
    const double bound = detail::selberg_growth_c *
                         std::exp(two_pi * p.delta * std::abs(w.imag()));
    if (!(std::abs(v) <= bound))
        throw consistency_error("extremal_eval_complex: growth envelope violated");
    return v;
}

namespace detail {

// Pointwise envelope used in tail bounds: |F(u)| <= min(sup, c/(d(|u|-L))^2).
inline double extremal_envelope(const SelbergParams& p, double u) {
    double excess = std::abs(u) - p.L;
    if (excess <= 0.0) return selberg_sup;
    double q = p.delta * excess;
    return std::min(selberg_sup, selberg_decay_c / (q * q));
}

// int_X^inf (B(v) - 1) dv and int_X^inf (B(-v) + 1) dv for large X.
inline double tail_integral_pos(double X) {
    double s = std::sin(two_pi * X);
    return 1.0 / (2 * pi * pi * X) - 1.0 / (12 * pi * pi * X * X) +
           s / (4 * pi * pi * pi * X * X);
}

inline double tail_integral_neg(double X) {
    double s = std::sin(two_pi * X);
    return 1.0 / (2 * pi * pi * X) + 1.0 / (12 * pi * pi * X * X) +
           s / (4 * pi * pi * pi * X * X);
}

inline constexpr double transform_tail_x = 4096.0;  // delta * (U - L)

}  // namespace detail

// Band-limited sampler of F: since supp Fhat lies in [-delta, delta], the
// spacing-h trapezoid sum h sum_k F(kh) e^{-2 pi i x k h} with
// h = 1/(2 dtil) reproduces Fhat(x) exactly for |x| <= 2 dtil - delta up
// to the truncation tail beyond |u| = U.
class SampledTransform {
public:
    SampledTransform(const SelbergParams& p, double x_max,
                     double tail_x = detail::transform_tail_x)
        : params_(p), tail_x_(tail_x) {
        p.validate();
        dtil_ = std::max(p.delta, std::abs(x_max)) + 0.5 * p.delta;
        h_ = 1.0 / (2.0 * dtil_);
        const double U = p.L + tail_x / p.delta;
        K_ = std::size_t(std::ceil(U / h_));
        samples_.resize(K_ + 1);
        for (std::size_t k = 0; k <= K_; ++k)
            samples_[k] = extremal_eval(p, double(k) * h_);
    }

    double x_max() const { return 2.0 * dtil_ - params_.delta; }

    double operator()(double x) const {
        if (std::abs(x) > x_max() + 1e-12)
            throw domain_error("SampledTransform: frequency outside alias-free range");
        kahan_sum acc;
        acc += 0.5 * samples_[0];
        const double w = two_pi * x * h_;
        for (std::size_t k = 1; k <= K_; ++k)
            acc += samples_[k] * std::cos(w * double(k));
        return 2.0 * h_ * acc.value();
    }

    // Truncation error bound for the omitted |u| > U samples: Dirichlet
    // bounds per oscillation frequency {x, x-delta, x+delta}, capped by the
    // absolute envelope integral.
    double err_bound(double x) const {
        const double X = tail_x_;
        const double d = params_.delta;
        const double abs_cap = 2.0 * detail::selberg_decay_c / (d * X);
        auto piece = [&](double beta, double amp) {
            double s = std::abs(std::sin(pi * beta * h_));
            double dirichlet = s > 1e-12
                ? 2.0 * h_ * detail::selberg_decay_c / (X * X * s)
                : abs_cap;
            return amp * std::min(dirichlet, abs_cap);
        };
        return piece(x, 1.0) + piece(x - d, 0.5) + piece(x + d, 0.5) + 1e-9;
    }

    // Trapezoid mass with the analytic tail corrections; equals the closed
    // form up to ~1e-8 and cross-checks the construction.
    double mass_quadrature() const {
        kahan_sum acc;
        acc += 0.5 * samples_[0];
        for (std::size_t k = 1; k <= K_; ++k) acc += samples_[k];
        double sum = 2.0 * h_ * acc.value();
        const double d = params_.delta;
        const double U_eff = (double(K_) + 0.5) * h_;
        const double Xo = d * (U_eff - params_.L);
        const double Xi = d * (U_eff + params_.L);
        // for u > U:  F+ = (E+(d(u+L)) + E-(d(u-L)))/2,
        //             F- = -(E-(d(u+L)) + E+(d(u-L)))/2,
        // with E+(v) = B(v) - 1 and E-(v) = B(-v) + 1; both half-lines.
        double tail;
        if (params_.sign == SelbergParams::plus)
            tail = (detail::tail_integral_pos(Xi) + detail::tail_integral_neg(Xo)) / d;
        else
            tail = -(detail::tail_integral_neg(Xi) + detail::tail_integral_pos(Xo)) / d;
        return sum + tail;
    }

private:
    SelbergParams params_;
    double tail_x_;
    double dtil_;
    double h_;
    std::size_t K_;
    std::vector<double> samples_;
};

// int F du: exactly 2L + 1/delta (plus) or 2L - 1/delta (minus) for this
// construction; every call cross-checks the closed form by quadrature.
inline double mass(const SelbergParams& p) {
    p.validate();
    const double closed = 2.0 * p.L +
        (p.sign == SelbergParams::plus ? 1.0 : -1.0) / p.delta;
    const double check = SampledTransform(p, 0.0).mass_quadrature();
    if (std::abs(check - closed) > 1e-4)
        throw consistency_error("mass: quadrature disagrees with closed form");
    return closed;
}

// Fhat(x) = int F(u) e^{-2 pi i x u} du (real and even).  Returns the
// closed-form mass at x = 0 and the band-limited sampling sum elsewhere.
inline double transform_hat(const SelbergParams& p, double x) {
    p.validate();
    if (x == 0.0) return mass(p);
    return SampledTransform(p, std::abs(x))(x);
}

}  // namespace zetalab
