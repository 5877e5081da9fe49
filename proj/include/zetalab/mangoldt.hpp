#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

// Lambda(n) for n = 2..limit: log p at prime powers p^k, 0 elsewhere.
struct MangoldtTable {
    std::int64_t limit = 0;
    std::vector<double> values;  // values[n - 2] = Lambda(n)

    double lambda(std::int64_t n) const {
        if (n < 2 || n > limit) return 0.0;
        return values[std::size_t(n - 2)];
    }
};

inline MangoldtTable von_mangoldt_sieve(std::int64_t limit) {
    if (limit < 2) throw domain_error("von_mangoldt_sieve: limit >= 2 required");
    if (limit > 100000000)
        throw capacity_error("von_mangoldt_sieve: limit exceeds 1e8 budget");
    MangoldtTable table;
    table.limit = limit;
    table.values.assign(std::size_t(limit - 1), 0.0);
    std::vector<bool> composite(std::size_t(limit + 1), false);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (composite[std::size_t(p)]) continue;
        const double logp = std::log(double(p));
        for (std::int64_t q = p; q <= limit; q *= p) {
            table.values[std::size_t(q - 2)] = logp;
            if (q > limit / p) break;  // overflow guard
        }
        if (p <= limit / p)
            for (std::int64_t m = p * p; m <= limit; m += p)
                composite[std::size_t(m)] = true;
    }
    return table;
}

}  // namespace zetalab
