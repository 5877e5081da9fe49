#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace zetalab {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647692;

// Neumaier-compensated accumulator.
struct kahan_sum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    kahan_sum& operator+=(double x) {
        add(x);
        return *this;
    }
    double value() const { return sum + comp; }
};

// Clenshaw evaluation of a Chebyshev series on [-1, 1].
inline double cheb_eval(std::span<const double> c, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) {
        double b0 = c[i] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c[0] + x * b1 - b2;
}

inline double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace zetalab
