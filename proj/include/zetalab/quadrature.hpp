#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <span>
#include <vector>

#include "zetalab/numeric.hpp"

namespace zetalab {

struct quad_result {
    double value = 0.0;
    double err = 0.0;      // accumulated error estimate
    std::size_t panels = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights (positive half, QUADPACK values).
inline constexpr std::array<double, 8> gk_nodes = {
    0.0,
    0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993944, 0.8648644233597691, 0.9491079123427585,
    0.9914553711208126,
};
inline constexpr std::array<double, 8> k15_w = {
    0.2094821410847278,
    0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
    0.1406532597155259, 0.1047900103222502, 0.0630920926299785,
    0.0229353220105292,
};
// Gauss-7 weights at nodes 0, 2, 4, 6 of the table above.
inline constexpr std::array<double, 4> g7_w = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
    0.1294849661688697,
};

template <class F>
std::pair<double, double> g7k15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double f0 = f(mid);
    double k15 = k15_w[0] * f0;
    double g7 = g7_w[0] * f0;
    for (int i = 1; i < 8; ++i) {
        double dx = half * gk_nodes[i];
        double fi = f(mid + dx) + f(mid - dx);
        k15 += k15_w[i] * fi;
        if (i % 2 == 0) g7 += g7_w[i / 2] * fi;
    }
    k15 *= half;
    g7 *= half;
    double d = std::abs(k15 - g7);
    double err = std::min(d, std::pow(200.0 * d, 1.5));
    return {k15, err};
}

}  // namespace detail

// Adaptive G7K15 integration of f over [a, b] to absolute target abs_tol.
// Optional breakpoints pre-split the interval (integrand kinks).  The
// returned err is the sum of per-panel estimates; it may exceed abs_tol
// only when max_panels was exhausted.
template <class F>
quad_result integrate_adaptive(const F& f, double a, double b,
                               double abs_tol,
                               std::span<const double> breakpoints = {},
                               std::size_t max_panels = 20000) {
    struct panel {
        double a, b, value, err;
        bool operator<(const panel& o) const { return err < o.err; }
    };
    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::priority_queue<panel> active;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto [v, e] = detail::g7k15(f, edges[i], edges[i + 1]);
        active.push({edges[i], edges[i + 1], v, e});
        total_err += e;
    }
    std::size_t n_panels = active.size();
    std::vector<panel> done;
    while (total_err > abs_tol && n_panels < max_panels && !active.empty()) {
        panel worst = active.top();
        active.pop();
        if (worst.err <= abs_tol / (2.0 * n_panels) ||
            worst.b - worst.a < 1e-14 * (std::abs(worst.a) + 1.0)) {
            done.push_back(worst);
            continue;
        }
        total_err -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        auto [v1, e1] = detail::g7k15(f, worst.a, mid);
        auto [v2, e2] = detail::g7k15(f, mid, worst.b);
        active.push({worst.a, mid, v1, e1});
        active.push({mid, worst.b, v2, e2});
        total_err += e1 + e2;
        ++n_panels;
    }
    while (!active.empty()) {
        done.push_back(active.top());
        active.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const panel& x, const panel& y) { return x.a < y.a; });
    kahan_sum value, err;
    for (const panel& p : done) {
        value += p.value;
        err += p.err;
    }
    return {value.value(), err.value(), done.size()};
}

}  // namespace zetalab
