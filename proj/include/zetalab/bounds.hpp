#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/zero_search.hpp"
#include "zetalab/zero_table.hpp"

namespace zetalab {

// band-limit schedule pi delta = loglog t - 2 logloglog t, clamped below
// by delta >= 1; the clamp is active for every desk-scale height.
inline double delta_schedule(double t) {
    if (!(t >= 100.0)) throw domain_error("delta_schedule: t >= 100 required");
    const double ll = std::log(std::log(t));
    const double lll = std::log(ll);
    return std::max(1.0, (ll - 2.0 * lll) / pi);
}

inline double theorem_bound(double t) {
    return 0.5 * std::log(t) / std::log(std::log(t));
}

// One (t, h) window of the zero-count deviation experiment.
struct WindowStat {
    double t;
    double h;
    double count;      // N(t+h) - N(t)
    double main;       // (h/2pi) log(t/2pi)
    double deviation;  // count - main
    double ratio;      // |deviation| / ((1/2) log t / loglog t)

    static const char* csv_header() { return "t,h,count,main,deviation,ratio"; }
};

inline std::vector<WindowStat> theorem1_scan(const ZeroTable& table,
                                             std::span<const double> t_grid,
                                             std::span<const double> h_grid) {
    std::vector<WindowStat> out;
    out.reserve(t_grid.size() * h_grid.size());
    for (double t : t_grid)
        for (double h : h_grid) {
            if (!(h > 0.0) || h > std::sqrt(t))
                throw domain_error("theorem1_scan: requires 0 < h <= sqrt(t)");
            WindowStat w;
            w.t = t;
            w.h = h;
            w.count = count_N(t + h, table) - count_N(t, table);
            w.main = h / two_pi * std::log(t / two_pi);
            w.deviation = w.count - w.main;
            w.ratio = std::abs(w.deviation) / theorem_bound(t);
            out.push_back(w);
        }
    return out;
}

// Littlewood-average deduction: within [t, t + log^2 t] there are heights
// with S <= 1 and with S >= -1; returns the first of each.
struct Theorem2Result {
    double h_plus;   // first h with S(t+h) <= 1
    double s_plus;
    double h_minus;  // first h with S(t+h) >= -1
    double s_minus;
    bool bound_check;

    static const char* csv_header() {
        return "t,h_plus,s_plus,h_minus,s_minus,bound_check";
    }
};

inline Theorem2Result theorem2_deduce(const ZeroTable& table, double t) {
    const double width = std::log(t) * std::log(t);
    table.check_coverage(t);
    table.check_coverage(t + width);
    const double step = two_pi / std::log(t) / 8.0;
    std::optional<double> h_plus, h_minus;
    double s_plus = 0.0, s_minus = 0.0;
    for (double h = 0.0; h <= width; h += step) {
        double s = s_of_t(t + h, table);
        if (!h_plus && s <= 1.0) {
            h_plus = h;
            s_plus = s;
        }
        if (!h_minus && s >= -1.0) {
            h_minus = h;
            s_minus = s;
        }
        if (h_plus && h_minus) break;
    }
    if (!h_plus || !h_minus)
        throw property_error(
            "theorem2_deduce: no admissible h within log^2 t of t = " +
            std::to_string(t) + " (data bug: contradicts the S1 average)");
    const double s_t = s_of_t(t, table);
    const bool check = s_t <= s_plus + std::abs(s_t - s_plus) + 1e-12 &&
                       s_t >= s_minus - std::abs(s_t - s_minus) - 1e-12;
    return {*h_plus, s_plus, *h_minus, s_minus, check};
}

// Consecutive-ordinate gap against the pi/loglog gamma bound.
struct GapStat {
    double gamma;
    double gamma_next;
    double gap;
    double bound;  // pi / loglog gamma
    double ratio;

    static const char* csv_header() {
        return "gamma,gamma_next,gap,bound,ratio";
    }
};

struct GapSummary {
    std::size_t count = 0;
    double max_ratio = 0.0;
    double at_gamma = 0.0;
    double max_gap = 0.0;
};

inline GapSummary gap_scan(
    const ZeroTable& table,
    const std::function<void(const GapStat&)>& sink = {}) {
    if (!table.verified)
        throw domain_error("gap_scan: requires a verified table");
    GapSummary summary;
    const auto& ord = table.ordinates;
    for (std::size_t i = 0; i + 1 < ord.size(); ++i) {
        GapStat g;
        g.gamma = ord[i];
        g.gamma_next = ord[i + 1];
        g.gap = g.gamma_next - g.gamma;
        g.bound = pi / std::log(std::log(g.gamma));
        g.ratio = g.gap / g.bound;
        if (sink) sink(g);
        ++summary.count;
        summary.max_gap = std::max(summary.max_gap, g.gap);
        if (g.ratio > summary.max_ratio) {
            summary.max_ratio = g.ratio;
            summary.at_gamma = g.gamma;
        }
    }
    return summary;
}

// Window count around a single ordinate: an upper bound for its
// multiplicity.  The default window is the schedule h = 1/(loglog gamma)^2
// shrunk to exclude resolved neighbours (anything farther than the 1e-7
// multiplicity-flag threshold); an explicit h overrides the shrinking.
inline int multiplicity_bound(const ZeroTable& table, double gamma,
                              double h = 0.0) {
    const auto& ord = table.ordinates;
    auto it = std::lower_bound(ord.begin(), ord.end(),
                               gamma - 1e-9 * (1.0 + std::abs(gamma)));
    if (it == ord.end() ||
        std::abs(*it - gamma) > 1e-9 * (1.0 + std::abs(gamma)))
        throw domain_error("multiplicity_bound: gamma is not a table ordinate");
    if (h <= 0.0) {
        const double ll = std::log(std::log(gamma));
        h = 1.0 / (ll * ll);
        const std::size_t i = std::size_t(it - ord.begin());
        if (i > 0) h = std::min(h, 1.98 * (gamma - ord[i - 1]));
        if (i + 1 < ord.size()) h = std::min(h, 1.98 * (ord[i + 1] - gamma));
        h = std::max(h, 2e-7);
        // keep the window inside the covered range
        h = std::min(h, 1.98 * (table.t_max - gamma));
        if (!table.covers_from_origin())
            h = std::min(h, 1.98 * (gamma - table.t_min));
    }
    return int(std::lround(count_N(gamma + h / 2, table) -
                           count_N(gamma - h / 2, table)));
}

// Exact one-sided extrema of S over [lo, hi]: S decreases between
// ordinates, so sup is attained just after an ordinate (or at lo) and inf
// just before one (or at hi).  No grid is involved.
struct SExtremaResult {
    double sup_s = 0.0;
    double inf_s = 0.0;
    double argmax = 0.0;
    double argmin = 0.0;
    double max_ratio = 0.0;  // max |S| / ((1/2) log t / loglog t)

    static const char* csv_header() {
        return "sup_s,inf_s,argmax,argmin,max_ratio";
    }
};

inline SExtremaResult s_extrema_scan(
    const ZeroTable& table, double lo, double hi,
    const std::function<void(const SSample&)>& sink = {}) {
    table.check_coverage(lo);
    table.check_coverage(hi);
    if (!(lo < hi)) throw domain_error("s_extrema_scan: lo < hi required");
    if (sink && (!table.covers_from_origin() || !table.offset_exact))
        throw range_error("s_extrema_scan: samples need absolute counts");

    SExtremaResult r;
    r.sup_s = s_of_t(lo, table);
    r.argmax = lo;
    r.inf_s = s_of_t(hi, table);
    r.argmin = hi;
    auto consider = [&](double t, double s) {
        if (s > r.sup_s) {
            r.sup_s = s;
            r.argmax = t;
        }
        if (s < r.inf_s) {
            r.inf_s = s;
            r.argmin = t;
        }
        if (t >= 100.0)
            r.max_ratio = std::max(r.max_ratio, std::abs(s) / theorem_bound(t));
    };

    const auto& ord = table.ordinates;
    auto first = std::lower_bound(ord.begin(), ord.end(), lo);
    auto last = std::upper_bound(ord.begin(), ord.end(), hi);

    kahan_sum s1_acc;
    double prev = 0.0;
    std::int64_t k = table.count_offset;
    if (sink) {
        // accumulate S1 from the origin up to the scan range
        for (auto it = ord.begin(); it != first; ++it) {
            s1_acc += (double(k) - 1.0) * (*it - prev) -
                      detail::theta_piece_integral(prev, *it) / pi;
            prev = *it;
            ++k;
        }
    } else {
        k += first - ord.begin();
    }

    for (auto it = first; it != last; ++it) {
        const double g = *it;
        const double theta = detail::theta_raw(g);
        const double s_right = double(k + 1) - 1.0 - theta / pi;
        consider(g, s_right);            // right limit
        consider(g, s_right - 1.0);      // left limit
        if (sink) {
            s1_acc += (double(k) - 1.0) * (g - prev) -
                      detail::theta_piece_integral(prev, g) / pi;
            prev = g;
            SSample s;
            s.t = g;
            s.n_of_t = double(k) + 0.5;  // half-jump convention
            s.theta = theta;
            s.s = s.n_of_t - 1.0 - theta / pi;
            s.s1 = s1_acc.value();
            sink(s);
        }
        ++k;
    }
    return r;
}

}  // namespace zetalab
