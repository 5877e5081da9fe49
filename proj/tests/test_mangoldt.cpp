#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "zetalab/mangoldt.hpp"

using namespace zetalab;
using Catch::Matchers::WithinAbs;

namespace {

// trial-factorization oracle
double lambda_brute(long n) {
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? std::log(double(p)) : 0.0;
    }
    return n >= 2 ? std::log(double(n)) : 0.0;  // n prime
}

}  // namespace

TEST_CASE("spot values") {
    auto t = von_mangoldt_sieve(100);
    CHECK_THAT(t.lambda(8), WithinAbs(std::log(2.0), 1e-15));
    CHECK_THAT(t.lambda(6), WithinAbs(0.0, 0.0));
    CHECK_THAT(t.lambda(97), WithinAbs(std::log(97.0), 1e-15));
    CHECK_THAT(t.lambda(81), WithinAbs(std::log(3.0), 1e-15));
    CHECK_THAT(t.lambda(64), WithinAbs(std::log(2.0), 1e-15));
    CHECK_THAT(t.lambda(100), WithinAbs(0.0, 0.0));
}

TEST_CASE("chebyshev psi at 100") {
    auto t = von_mangoldt_sieve(100);
    double sum = 0.0;
    for (long n = 2; n <= 100; ++n) sum += t.lambda(n);
    // brute-force over prime powers <= 100, frozen at high precision
    CHECK_THAT(sum, WithinAbs(94.04531122935739225, 1e-10));
    double brute = 0.0;
    for (long n = 2; n <= 100; ++n) brute += lambda_brute(n);
    CHECK_THAT(sum, WithinAbs(brute, 1e-12));
}

TEST_CASE("random cross-check against trial factorization") {
    auto t = von_mangoldt_sieve(200000);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> dist(2, 200000);
    for (int i = 0; i < 1000; ++i) {
        long n = dist(rng);
        INFO("n = " << n);
        CHECK_THAT(t.lambda(n), WithinAbs(lambda_brute(n), 1e-13));
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(von_mangoldt_sieve(1), domain_error);
    CHECK_THROWS_AS(von_mangoldt_sieve(200000000), capacity_error);
}
