#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "zetalab/zero_table.hpp"
#include "zetalab/quadrature.hpp"

using namespace zetalab;
using Catch::Matchers::WithinAbs;

namespace {

std::filesystem::path work_file(const std::string& name) {
    return std::filesystem::path(ZETALAB_WORK_DIR) / name;
}

ZeroTable& reference() {
    static ZeroTable t = [] {
        auto table = import_zeros(ZETALAB_DATA_DIR "/zeta_zeros_10k.txt");
        return table;
    }();
    return t;
}

}  // namespace

TEST_CASE("import parses plain ordinate lists") {
    auto p = work_file("two_zeros.txt");
    std::ofstream(p) << "14.134725141734\n21.022039638771\n";
    auto t = import_zeros(p);
    REQUIRE(t.size() == 2);
    CHECK(t.source == zero_source::imported);
    CHECK_THAT(t.ordinates[0], WithinAbs(14.134725141734, 1e-12));
    CHECK(t.t_max == t.ordinates[1]);
}

TEST_CASE("import skips header lines") {
    auto p = work_file("with_header.txt");
    std::ofstream(p) << "zeros of Z\nsecond header line\n14.1347251417\n";
    auto t = import_zeros(p, 2);
    REQUIRE(t.size() == 1);
}

TEST_CASE("import rejects bad input") {
    auto empty = work_file("empty.txt");
    std::ofstream(empty) << "";
    CHECK_THROWS_MATCHES(import_zeros(empty), parse_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("empty table")));

    auto unordered = work_file("unordered.txt");
    std::ofstream(unordered) << "14.13\n13.99\n";
    CHECK_THROWS_MATCHES(import_zeros(unordered), parse_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring(":2:")));

    auto junk = work_file("junk.txt");
    std::ofstream(junk) << "14.13\nnot-a-number\n";
    CHECK_THROWS_AS(import_zeros(junk), parse_error);

    CHECK_THROWS_AS(import_zeros(work_file("missing.txt")), io_error);
}

TEST_CASE("count_N on the reference table") {
    const auto& t = reference();
    CHECK(count_N(100.0, t) == 29.0);
    CHECK(count_N(1000.0, t) == 649.0);
    CHECK(count_N(14.0, t) == 0.0);
    // half-jump convention at an ordinate
    CHECK(count_N(t.ordinates[0], t) == 0.5);
    CHECK(count_N(t.ordinates[42], t) == 42.5);
    CHECK_THROWS_AS(count_N(99999.0, t), range_error);
}

TEST_CASE("count_N is nondecreasing with unit jumps at ordinates") {
    const auto& t = reference();
    double prev = 0.0;
    for (double x = 14.0; x < 120.0; x += 0.01) {
        double cur = count_N(x, t);
        CHECK(cur >= prev);
        prev = cur;
    }
    for (int k : {0, 10, 100}) {
        double g = t.ordinates[std::size_t(k)];
        CHECK(count_N(g + 1e-9, t) - count_N(g - 1e-9, t) == 1.0);
    }
}

TEST_CASE("s_of_t composition and mean value") {
    const auto& t = reference();
    // S(100) = 29 - 1 - theta(100)/pi; frozen oracle theta(100)
    CHECK_THAT(s_of_t(100.0, t),
               WithinAbs(28.0 - 87.97216523178721962548 / pi, 1e-9));
    double g1 = t.ordinates[0];
    CHECK_THAT(s_of_t(g1, t), WithinAbs(0.5 - 1.0 - rs_theta(g1) / pi, 1e-12));
    // S oscillates around zero
    kahan_sum acc;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        double x = 10.0 + (1000.0 - 10.0) * (i + 0.5) / n;
        acc += s_of_t(x, t);
    }
    double mean = acc.value() / n;
    INFO("mean S over [10, 1000] = " << mean);
    CHECK(std::abs(mean) < 0.05);
}

TEST_CASE("sandwich corridor |S| < 2.5 on a grid") {
    const auto& t = reference();
    for (double x = 10.0; x < 9000.0; x += 0.37)
        CHECK(std::abs(s_of_t(x, t)) < 2.5);
}

namespace {

// jump-aware trapezoid oracle for S1 with ~n points in total
double s1_trapezoid_oracle(double t_end, const ZeroTable& table, long n) {
    kahan_sum acc;
    double prev = 0.0;
    std::vector<double> cuts;
    for (double g : table.ordinates) {
        if (g >= t_end) break;
        cuts.push_back(g);
    }
    cuts.push_back(t_end);
    const double h_target = t_end / double(n);
    for (double cut : cuts) {
        double width = cut - prev;
        long m = std::max(2L, long(std::ceil(width / h_target)));
        double h = width / double(m);
        // piece is smooth: S evaluated away from the jump endpoints
        kahan_sum piece;
        piece += 0.5 * (s_of_t(prev + 1e-12 * (1 + std::abs(prev)), table) +
                        s_of_t(cut - 1e-12 * (1 + std::abs(cut)), table));
        for (long i = 1; i < m; ++i) piece += s_of_t(prev + h * i, table);
        acc += piece.value() * h;
        prev = cut;
    }
    return acc.value();
}

}  // namespace

TEST_CASE("s1_integral matches its quadrature pieces and the oracle") {
    const auto& t = reference();
    // no zeros below 10: S1(10) = -int_0^10 (1 + theta/pi)
    auto direct = integrate_adaptive(
        [](double u) { return 1.0 + detail::theta_raw(u) / pi; }, 0.0, 10.0,
        1e-10);
    CHECK_THAT(s1_integral(10.0, t), WithinAbs(-direct.value, 1e-8));

    CHECK_THAT(s1_integral(1000.0, t),
               WithinAbs(s1_trapezoid_oracle(1000.0, t, 1000000), 1e-4));

    // continuity across an ordinate
    double g1 = t.ordinates[0];
    double eps = 1e-7;
    CHECK(std::abs(s1_integral(g1 - eps, t) - s1_integral(g1, t)) <= 2 * eps);
}

TEST_CASE("SSample ties the fields together") {
    const auto& t = reference();
    auto s = sample(t, 500.0);
    CHECK(s.t == 500.0);
    CHECK_THAT(s.s, WithinAbs(s.n_of_t - 1.0 - s.theta / pi, 1e-9));
}

TEST_CASE("ZTAB1 round trip is bit exact") {
    ZeroTable t;
    t.ordinates = {14.134725141734694, 21.022039638771555, 25.01085758014569};
    t.t_min = 10.0;
    t.t_max = 30.0;
    t.source = zero_source::computed;
    t.verified = true;
    t.count_offset = 0;
    auto p = work_file("cache.ztab");
    save_ztab(t, p);
    auto u = load_ztab(p);
    REQUIRE(u.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(u.ordinates[i] == t.ordinates[i]);
    CHECK(u.t_min == t.t_min);
    CHECK(u.t_max == t.t_max);
    CHECK(u.source == t.source);
    CHECK(u.verified == t.verified);

    // second save is byte-identical
    auto p2 = work_file("cache2.ztab");
    save_ztab(u, p2);
    std::ifstream a(p, std::ios::binary), b(p2, std::ios::binary);
    std::string sa((std::istreambuf_iterator<char>(a)), {});
    std::string sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(sa == sb);
    CHECK(sa.size() == 40 + 8 * t.size());
    CHECK(sa.substr(0, 5) == "ZTAB1");
}

TEST_CASE("ZTAB1 rejects corrupt caches") {
    auto p = work_file("corrupt.ztab");
    std::ofstream(p, std::ios::binary) << "ZTAB1xyz";
    CHECK_THROWS_AS(load_ztab(p), parse_error);
    auto q = work_file("badmagic.ztab");
    std::ofstream(q, std::ios::binary) << std::string(48, 'A');
    CHECK_THROWS_AS(load_ztab(q), parse_error);
}

TEST_CASE("close pairs are flagged, never merged") {
    ZeroTable t;
    t.ordinates = {100.0, 100.00000002, 105.0};
    t.t_min = 99.0;
    t.t_max = 110.0;
    auto pairs = t.close_pairs();
    REQUIRE(pairs.size() == 1);
    CHECK(t.size() == 3);
}
