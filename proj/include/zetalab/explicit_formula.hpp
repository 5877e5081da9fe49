#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/mangoldt.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/selberg.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/zero_table.hpp"

namespace zetalab {

// Both sides of the Guinand-Weil identity for h(w) = F(w - t), with every
// truncation bound accounted.  residual = zero_side - (boundary + pi_term
// + arch - prime_side); |residual| <= budget or the evaluation throws.
struct ExplicitFormulaReport {
    double t = 0.0;
    SelbergParams params{1.0, 1.0, SelbergParams::plus};
    double zero_side = 0.0;
    double zero_tail_bound = 0.0;
    double boundary = 0.0;
    double arch = 0.0;
    double pi_term = 0.0;
    double prime_side = 0.0;
    double residual = 0.0;
    double budget = 0.0;

    static const char* csv_header() {
        return "t,L,delta,sign,zero_side,zero_tail_bound,boundary,arch,"
               "pi_term,prime_side,residual,budget";
    }
};

struct ZeroSideResult {
    double sum = 0.0;
    double tail_bound = 0.0;
};

namespace detail {

inline double zero_density(double t) { return std::log(t / two_pi) / two_pi; }

// Upper bound for the mirror-zero contribution sum_gamma |F(-gamma - t)|
// (ordinates of negative sign enter through evenness of F): the stored
// ordinates contribute their actual |F| values, the rest the decay
// envelope.
inline double mirror_bound(const ZeroTable& table, double t,
                           const SelbergParams& p) {
    kahan_sum sum;
    for (double g : table.ordinates)
        sum += std::abs(extremal_eval(p, g + t));
    double out = sum.value();
    // zeros beyond the table
    double v0 = table.t_max + t - p.L;
    out += (zero_density(table.t_max + t) + 1.0) * selberg_decay_c /
           (p.delta * p.delta * v0);
    // zeros below t_min (only for detached tables)
    if (!table.covers_from_origin())
        out += double(table.count_offset) * extremal_envelope(p, t + 14.0);
    return out;
}

}  // namespace detail

// sum over stored ordinates of F(gamma - t), restricted to the window
// |gamma - t| <= L + w_max; everything omitted (window truncation, zeros
// beyond table coverage, mirror zeros) enters tail_bound.
inline ZeroSideResult zero_side(const ZeroTable& table, double t,
                                const SelbergParams& p,
                                double w_max = 0.0) {
    p.validate();
    if (w_max <= 0.0) w_max = 4000.0 / p.delta;
    const double w_min = 50.0 / p.delta;
    if (table.t_max < t + p.L + w_min)
        throw range_error(
            "zero_side: table must cover up to t + L + 50/delta = " +
            std::to_string(t + p.L + w_min));
    if (!table.covers_from_origin() && table.t_min > t - p.L - w_min &&
        t - p.L - w_min > 14.0)
        throw range_error(
            "zero_side: table must cover down to t - L - 50/delta = " +
            std::to_string(t - p.L - w_min));

    const double lo_edge = std::max(0.0, t - p.L - w_max);
    const double hi_edge = std::min(table.t_max, t + p.L + w_max);
    const auto& ord = table.ordinates;
    auto first = std::lower_bound(ord.begin(), ord.end(), lo_edge);
    auto last = std::upper_bound(ord.begin(), ord.end(), hi_edge);
    kahan_sum acc;
    for (auto it = first; it != last; ++it)
        acc += extremal_eval(p, *it - t);

    // spec tail form: 2 * density * C_iv / (delta^2 W) per truncated side
    double tail = 0.0;
    const double w_hi = hi_edge - t - p.L;
    tail += 2.0 * detail::zero_density(hi_edge + 1.0) *
            detail::selberg_decay_c / (p.delta * p.delta * w_hi);
    const double w_lo = t - p.L - lo_edge;
    if (lo_edge > 14.0 && w_lo > 0.0)
        tail += 2.0 * detail::zero_density(lo_edge + 2.0) *
                detail::selberg_decay_c / (p.delta * p.delta * w_lo);
    tail += detail::mirror_bound(table, t, p);
    // stored-ordinate accuracy: |F'| <= ~4 delta within the window
    tail += double(last - first) * 4.0 * p.delta * table.ordinate_error;
    return {acc.value(), tail};
}

// h(1/(2i)) + h(-1/(2i)) = F(t + i/2) + F(t - i/2), a conjugate pair.
inline double boundary_terms(double t, const SelbergParams& p) {
    if (!(t >= 10.0)) throw domain_error("boundary_terms: t >= 10 required");
    auto v = extremal_eval_complex(p, {t, -0.5});
    return 2.0 * v.real();
}

struct ArchResult {
    double value = 0.0;
    double quad_err = 0.0;
    double tail_bound = 0.0;
};

// (1/2pi) int F(u - t) Re psi(1/4 + iu/2) du over a window around t wide
// enough that the decay-envelope tail is negligible against the budget.
inline ArchResult arch_term_detail(double t, const SelbergParams& p) {
    p.validate();
    if (!(t >= 10.0)) throw domain_error("arch_term: t >= 10 required");
    const double U = std::max(4.0 * std::sqrt(t),
                              3600.0 / (p.delta * p.delta));
    const double lo = t - p.L - U;
    const double hi = t + p.L + U;
    auto f = [&](double u) {
        return extremal_eval(p, u - t) * digamma_re_quarter(u);
    };
    const double kinks[] = {t - p.L, t + p.L};
    auto q = integrate_adaptive(f, lo, hi, 1e-9, kinks, 60000);
    // |psi_re| <= log(|u| + 2) against the decay envelope outside [lo, hi]
    const double logu = std::log(std::max(std::abs(lo), hi) + 2.0);
    const double tail = 2.0 * detail::selberg_decay_c * logu /
                        (two_pi * p.delta * p.delta * U);
    return {q.value / two_pi, q.err / two_pi, tail};
}

inline double arch_term(double t, const SelbergParams& p) {
    return arch_term_detail(t, p).value;
}

// Fhat(log n / 2pi) for every prime power n < e^{2 pi delta}, shared by
// all heights t at fixed params.
struct PrimeHat {
    SelbergParams params{1.0, 1.0, SelbergParams::plus};
    std::int64_t n_max = 0;
    std::vector<double> hat;   // hat[n - 2], only prime-power entries filled
    std::vector<double> err;
};

inline std::int64_t prime_cutoff(double delta) {
    return std::int64_t(std::floor(std::exp(two_pi * delta)));
}

inline PrimeHat build_prime_hat(const SelbergParams& p,
                                const MangoldtTable& m,
                                double tail_x = detail::transform_tail_x) {
    p.validate();
    PrimeHat out;
    out.params = p;
    out.n_max = prime_cutoff(p.delta);
    if (m.limit < out.n_max)
        throw capacity_error(
            "prime_side: Mangoldt table limit must reach " +
            std::to_string(out.n_max));
    out.hat.assign(std::size_t(out.n_max - 1), 0.0);
    out.err.assign(std::size_t(out.n_max - 1), 0.0);
    SampledTransform st(p, p.delta, tail_x);
    for (std::int64_t n = 2; n <= out.n_max; ++n) {
        if (m.lambda(n) == 0.0) continue;
        const double x = std::log(double(n)) / two_pi;
        out.hat[std::size_t(n - 2)] = st(x);
        out.err[std::size_t(n - 2)] = st.err_bound(x);
    }
    return out;
}

struct PrimeSideResult {
    double value = 0.0;
    double err_bound = 0.0;
};

// (1/pi) sum_{2 <= n < e^{2 pi delta}} Lambda(n)/sqrt(n) cos(t log n)
// Fhat(log n / 2pi); the band limit truncates the sum exactly.
inline PrimeSideResult prime_side_detail(double t, const SelbergParams& p,
                                         const MangoldtTable& m,
                                         const PrimeHat* cache = nullptr) {
    PrimeHat local;
    if (!cache) {
        local = build_prime_hat(p, m);
        cache = &local;
    } else if (cache->params.L != p.L || cache->params.delta != p.delta ||
               cache->params.sign != p.sign) {
        throw domain_error("prime_side: cache built for different params");
    }
    kahan_sum acc;
    double err = 0.0;
    for (std::int64_t n = 2; n <= cache->n_max; ++n) {
        const double lam = m.lambda(n);
        if (lam == 0.0) continue;
        const double w = lam / std::sqrt(double(n));
        acc += w * std::cos(t * std::log(double(n))) *
               cache->hat[std::size_t(n - 2)];
        err += w * cache->err[std::size_t(n - 2)];
    }
    return {acc.value() / pi, err / pi};
}

inline double prime_side(double t, const SelbergParams& p,
                         const MangoldtTable& m,
                         const PrimeHat* cache = nullptr) {
    return prime_side_detail(t, p, m, cache).value;
}

// Assembles Eq-level bookkeeping for one (t, params) pair.
inline ExplicitFormulaReport evaluate_formula(const ZeroTable& table, double t,
                                              const SelbergParams& p,
                                              const MangoldtTable& m,
                                              const PrimeHat* cache = nullptr) {
    ExplicitFormulaReport rep;
    rep.t = t;
    rep.params = p;
    auto zs = zero_side(table, t, p);
    rep.zero_side = zs.sum;
    rep.zero_tail_bound = zs.tail_bound;
    rep.boundary = boundary_terms(t, p);
    auto arch = arch_term_detail(t, p);
    rep.arch = arch.value;
    const double f0 = mass(p);
    rep.pi_term = -f0 * std::log(pi) / two_pi;
    auto ps = prime_side_detail(t, p, m, cache);
    rep.prime_side = ps.value;
    rep.residual = rep.zero_side -
                   (rep.boundary + rep.pi_term + rep.arch - rep.prime_side);
    rep.budget = rep.zero_tail_bound + arch.quad_err + arch.tail_bound +
                 ps.err_bound + 1e-9;
    return rep;
}

// Same, but |residual| <= budget is enforced: a violation signals a bug or
// an unverified zero table.
inline ExplicitFormulaReport verify_formula(const ZeroTable& table, double t,
                                            const SelbergParams& p,
                                            const MangoldtTable& m,
                                            const PrimeHat* cache = nullptr) {
    auto rep = evaluate_formula(table, t, p, m, cache);
    if (!(std::abs(rep.residual) <= rep.budget))
        throw property_error(
            "explicit formula violated: |residual| = " +
            std::to_string(std::abs(rep.residual)) + " > budget = " +
            std::to_string(rep.budget) + " at t = " + std::to_string(t));
    return rep;
}

// Counting sandwich around t: sum F-(gamma - t) <= N(t+L) - N(t-L)
// <= sum F+(gamma - t), up to the tail bounds.
struct SandwichResult {
    double lower = 0.0;
    double exact = 0.0;
    double upper = 0.0;
    double tail_lower = 0.0;
    double tail_upper = 0.0;
};

inline SandwichResult window_count_sandwich(const ZeroTable& table, double t,
                                            const SelbergParams& p_plus,
                                            const SelbergParams& p_minus) {
    if (p_plus.L != p_minus.L || p_plus.delta != p_minus.delta)
        throw domain_error("window_count_sandwich: params must share (L, delta)");
    if (p_plus.sign != SelbergParams::plus ||
        p_minus.sign != SelbergParams::minus)
        throw domain_error("window_count_sandwich: wrong signs");
    auto lo = zero_side(table, t, p_minus);
    auto hi = zero_side(table, t, p_plus);
    SandwichResult r;
    r.lower = lo.sum;
    r.upper = hi.sum;
    r.tail_lower = lo.tail_bound;
    r.tail_upper = hi.tail_bound;
    r.exact = count_N(t + p_plus.L, table) - count_N(t - p_plus.L, table);
    return r;
}

}  // namespace zetalab
