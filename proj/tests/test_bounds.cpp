#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "zetalab/bounds.hpp"

using namespace zetalab;
using Catch::Matchers::WithinAbs;

namespace {

ZeroTable& reference() {
    static ZeroTable t = [] {
        auto tab = import_zeros(ZETALAB_DATA_DIR "/zeta_zeros_10k.txt");
        verify_table(tab);
        return tab;
    }();
    return t;
}

}  // namespace

TEST_CASE("delta schedule clamps to 1 at desk heights") {
    // loglog t stays below e + 2 logloglog t until astronomically large t
    CHECK(delta_schedule(std::exp(std::exp(std::exp(1.0)))) == 1.0);
    CHECK(delta_schedule(1e6) == 1.0);
    CHECK(delta_schedule(100.0) == 1.0);
    CHECK_THROWS_AS(delta_schedule(50.0), domain_error);
    double prev = 0.0;
    for (double t = 100.0; t < 1e6; t *= 3.7) {
        double cur = delta_schedule(t);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("theorem1 windows carry the right main term") {
    const auto& tab = reference();
    double ts[] = {1000.0};
    double hs[] = {1.0};
    auto stats = theorem1_scan(tab, ts, hs);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].count >= 0.0);
    CHECK(stats[0].count == std::floor(stats[0].count));  // integer window
    CHECK_THAT(stats[0].main, WithinAbs(std::log(1000.0 / two_pi) / two_pi, 1e-12));
    CHECK_THAT(stats[0].main, WithinAbs(0.80690, 1e-4));
    CHECK_THAT(stats[0].deviation, WithinAbs(stats[0].count - stats[0].main, 1e-12));
}

TEST_CASE("theorem1 shrinking windows vanish") {
    const auto& tab = reference();
    double ts[] = {1000.0};
    for (double h : {1e-3, 1e-5}) {
        double hs[] = {h};
        auto stats = theorem1_scan(tab, ts, hs);
        CHECK(stats[0].count == 0.0);
        CHECK(std::abs(stats[0].main) < 1e-3);
    }
}

TEST_CASE("theorem1 rejects h beyond sqrt(t)") {
    const auto& tab = reference();
    double ts[] = {1000.0};
    double bad[] = {31.7};  // sqrt(1000) = 31.62
    CHECK_THROWS_AS(theorem1_scan(tab, ts, bad), domain_error);
    double ok[] = {31.6};
    CHECK_NOTHROW(theorem1_scan(tab, ts, ok));
}

TEST_CASE("deviation reconstructs from S differences") {
    const auto& tab = reference();
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> t_dist(100.0, 9000.0);
    double c_max = 0.0;
    for (int i = 0; i < 300; ++i) {
        double t = t_dist(rng);
        double h = std::min(std::sqrt(t), 1.0 + 20.0 * double(i % 7));
        if (t + h > tab.t_max) continue;
        double ts[] = {t};
        double hs[] = {h};
        auto stat = theorem1_scan(tab, ts, hs)[0];
        double s_diff = s_of_t(t + h, tab) - s_of_t(t, tab);
        double allowance = (1.0 + h * h) / t;
        double c = std::abs(stat.deviation - s_diff) / allowance;
        c_max = std::max(c_max, c);
        CHECK(std::abs(stat.deviation - s_diff) <= allowance);
    }
    INFO("measured reconstruction constant " << c_max);
    CHECK(c_max <= 1.0);
}

TEST_CASE("theorem2 finds admissible heights in every window") {
    const auto& tab = reference();
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> t_dist(100.0, 9700.0);
    for (int i = 0; i < 40; ++i) {
        double t = t_dist(rng);
        if (t + std::log(t) * std::log(t) > tab.t_max) continue;
        auto r = theorem2_deduce(tab, t);
        CHECK(r.h_plus <= std::log(t) * std::log(t));
        CHECK(r.s_plus <= 1.0);
        CHECK(r.h_minus <= std::log(t) * std::log(t));
        CHECK(r.s_minus >= -1.0);
        CHECK(r.bound_check);
    }
}

TEST_CASE("theorem2 starts its scan at t itself") {
    const auto& tab = reference();
    // pick t with S(t) <= 1 (almost any); then h_plus = 0
    double t = 500.0;
    REQUIRE(s_of_t(t, tab) <= 1.0);
    auto r = theorem2_deduce(tab, t);
    CHECK(r.h_plus == 0.0);
}

TEST_CASE("gap scan reproduces the first gap and telescopes") {
    auto& tab = reference();
    double total = 0.0;
    std::size_t count = 0;
    GapStat first{};
    auto summary = gap_scan(tab, [&](const GapStat& g) {
        if (count == 0) first = g;
        total += g.gap;
        ++count;
    });
    CHECK(count == tab.size() - 1);
    CHECK_THAT(first.gap, WithinAbs(21.022039638771555 - 14.134725141734694, 1e-9));
    CHECK_THAT(total, WithinAbs(tab.ordinates.back() - tab.ordinates.front(), 1e-6));
    CHECK(summary.max_ratio > 0.0);
    CHECK(summary.count == count);
}

TEST_CASE("mean gap near the ceiling matches the density") {
    auto& tab = reference();
    const auto& ord = tab.ordinates;
    auto lo = std::lower_bound(ord.begin(), ord.end(), 9700.0);
    double span = ord.back() - *lo;
    double mean = span / double(ord.end() - lo - 1);
    double predicted = two_pi / std::log(9800.0 / two_pi);
    CHECK(std::abs(mean - predicted) / predicted < 0.1);
}

TEST_CASE("gap scan requires a verified table") {
    ZeroTable t;
    t.ordinates = {14.1, 21.0};
    t.t_min = 10;
    t.t_max = 30;
    CHECK_THROWS_AS(gap_scan(t), domain_error);
}

TEST_CASE("multiplicity bound returns 1 for real zeros") {
    auto& tab = reference();
    CHECK(multiplicity_bound(tab, tab.ordinates[0]) == 1);
    CHECK(multiplicity_bound(tab, tab.ordinates[5000]) == 1);
    // the Lehmer pair: both members still isolate to multiplicity 1
    auto it = std::lower_bound(tab.ordinates.begin(), tab.ordinates.end(), 7005.0);
    REQUIRE(std::abs(*it - 7005.0629) < 1e-3);
    CHECK(multiplicity_bound(tab, *it) == 1);
    CHECK(multiplicity_bound(tab, *(it + 1)) == 1);
}

TEST_CASE("multiplicity window widened by hand catches the neighbour") {
    auto& tab = reference();
    // gamma_1 with h = 8: window (10.13, 18.13] u ... catches gamma_2? no:
    // (14.13 - 4, 14.13 + 4] = (10.13, 18.13] only gamma_1; spec example
    // uses h = 8 full width to reach 21.02 needs h = 14: use h = 14.
    CHECK(multiplicity_bound(tab, tab.ordinates[0], 8.0) == 1);
    CHECK(multiplicity_bound(tab, tab.ordinates[0], 14.0) == 2);
    CHECK_THROWS_AS(multiplicity_bound(tab, 15.0), domain_error);
}

TEST_CASE("s extrema structure over [10, 100]") {
    auto& tab = reference();
    auto r = s_extrema_scan(tab, 10.0, 100.0);
    // sup attained just after an ordinate: recompute by brute force
    double sup = s_of_t(10.0, tab);
    const auto& ord = tab.ordinates;
    for (std::size_t k = 0; k < ord.size() && ord[k] <= 100.0; ++k)
        sup = std::max(sup, double(k + 1) - 1.0 - rs_theta(ord[k]) / pi);
    CHECK_THAT(r.sup_s, WithinAbs(sup, 1e-12));
    CHECK(r.inf_s <= 0.0);
    CHECK(r.max_ratio < 1.0);
}

TEST_CASE("s extrema samples carry consistent bookkeeping") {
    auto& tab = reference();
    std::vector<SSample> samples;
    auto r = s_extrema_scan(tab, 10.0, 200.0,
                            [&](const SSample& s) { samples.push_back(s); });
    REQUIRE(samples.size() == 79);  // N(200) = 79
    for (const auto& s : samples) {
        CHECK_THAT(s.s, WithinAbs(s.n_of_t - 1.0 - s.theta / pi, 1e-9));
        CHECK(s.n_of_t == std::floor(s.n_of_t) + 0.5);
        CHECK_THAT(s.s1, WithinAbs(s1_integral(s.t, tab), 1e-8));
    }
    CHECK(r.sup_s >= r.inf_s);
}

TEST_CASE("S is strictly decreasing between consecutive ordinates") {
    auto& tab = reference();
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, 5000);
    for (int i = 0; i < 200; ++i) {
        std::size_t k = pick(rng);
        double a = tab.ordinates[k];
        double b = tab.ordinates[k + 1];
        double u1 = a + (b - a) * 0.25;
        double u2 = a + (b - a) * 0.5;
        double u3 = a + (b - a) * 0.75;
        CHECK(s_of_t(u1, tab) > s_of_t(u2, tab));
        CHECK(s_of_t(u2, tab) > s_of_t(u3, tab));
    }
}
