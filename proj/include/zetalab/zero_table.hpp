#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/special_functions.hpp"

namespace zetalab {

enum class zero_source : std::uint8_t { computed = 0, imported = 1 };

// Sorted table of zero ordinates covering the height range (t_min, t_max].
// A table whose range starts below the first zero (t_min <= 14) provides
// absolute counts from the origin; otherwise count_offset carries the
// number of zeros at or below t_min.
struct ZeroTable {
    std::vector<double> ordinates;
    double t_min = 0.0;
    double t_max = 0.0;
    zero_source source = zero_source::computed;
    bool verified = false;
    std::int64_t count_offset = 0;
    bool offset_exact = true;     // false: count_offset is a theta estimate
    double ordinate_error = 1e-8; // abs accuracy of stored ordinates

    bool covers_from_origin() const { return t_min <= 14.0; }
    std::size_t size() const { return ordinates.size(); }

    void check_coverage(double t) const {
        double lo = covers_from_origin() ? 0.0 : t_min;
        if (!(t >= lo && t <= t_max))
            throw range_error("ZeroTable: height " + std::to_string(t) +
                              " outside covered range (" +
                              std::to_string(t_min) + ", " +
                              std::to_string(t_max) + "]");
    }

    // Ordinate pairs closer than tol (multiplicity alarm; never merged).
    std::vector<std::pair<double, double>> close_pairs(
        double tol = 1e-7) const {
        std::vector<std::pair<double, double>> out;
        for (std::size_t i = 0; i + 1 < ordinates.size(); ++i)
            if (ordinates[i + 1] - ordinates[i] < tol)
                out.emplace_back(ordinates[i], ordinates[i + 1]);
        return out;
    }
};

// Point sample of the argument-function bookkeeping.
struct SSample {
    double t;
    double n_of_t;  // N(t), half-integer at ordinates
    double theta;
    double s;       // S(t)
    double s1;      // S1(t) = int_0^t S
};

// N(t): zeros with ordinate <= t, an ordinate equal to t counting 1/2
// per multiplicity.
inline double count_N(double t, const ZeroTable& table) {
    table.check_coverage(t);
    auto lo = std::lower_bound(table.ordinates.begin(), table.ordinates.end(), t);
    auto hi = std::upper_bound(lo, table.ordinates.end(), t);
    double below = double(lo - table.ordinates.begin());
    double equal = double(hi - lo);
    return double(table.count_offset) + below + 0.5 * equal;
}

// S(t) = N(t) - 1 - theta(t)/pi.
inline double s_of_t(double t, const ZeroTable& table) {
    return count_N(t, table) - 1.0 - detail::theta_raw(t) / pi;
}

namespace detail {

// integral of theta over [a, b]; theta is smooth so a single escalating
// G7K15 panel per call is enough at the widths used here.
inline double theta_piece_integral(double a, double b) {
    auto f = [](double u) { return theta_raw(u); };
    auto [v, e] = g7k15(f, a, b);
    if (e > 1e-10) {
        quad_result q = integrate_adaptive(f, a, b, 1e-10);
        return q.value;
    }
    return v;
}

}  // namespace detail

// S1(t) = int_0^t S(u) du, integrated piecewise-exactly between ordinates:
// on each piece S(u) = k - 1 - theta(u)/pi with k constant, so only theta
// needs quadrature.  Pieces are combined with compensated summation.
inline double s1_integral(double t, const ZeroTable& table) {
    table.check_coverage(t);
    if (!table.covers_from_origin() || !table.offset_exact)
        throw range_error("s1_integral: table must cover heights from 0");
    kahan_sum acc;
    double prev = 0.0;
    std::int64_t k = table.count_offset;
    for (double g : table.ordinates) {
        if (g > t) break;
        // piece [prev, g) with N = k
        acc += (double(k) - 1.0) * (g - prev) -
               detail::theta_piece_integral(prev, g) / pi;
        prev = g;
        ++k;
    }
    acc += (double(k) - 1.0) * (t - prev) -
           detail::theta_piece_integral(prev, t) / pi;
    return acc.value();
}

inline SSample sample(const ZeroTable& table, double t) {
    return {t, count_N(t, table), detail::theta_raw(t), s_of_t(t, table),
            s1_integral(t, table)};
}

// ---------------------------------------------------------------------------
// Import (Odlyzko-style text: one decimal ordinate per line, optional
// header lines skipped).

inline ZeroTable import_zeros(const std::filesystem::path& path, int skip = 0) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    ZeroTable table;
    table.source = zero_source::imported;
    table.ordinate_error = 1e-9;
    std::string line;
    long line_no = 0;
    for (int i = 0; i < skip && std::getline(in, line); ++i) ++line_no;
    double prev = -1.0;
    while (std::getline(in, line)) {
        ++line_no;
        const char* b = line.data();
        const char* e = b + line.size();
        while (b < e && (*b == ' ' || *b == '\t')) ++b;
        while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
        if (b == e) continue;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc{} || ptr != e)
            throw parse_error(path.string() + ":" + std::to_string(line_no) +
                              ": not a decimal ordinate: '" + line + "'");
        if (v <= prev)
            throw parse_error(path.string() + ":" + std::to_string(line_no) +
                              ": ordinates not strictly increasing");
        table.ordinates.push_back(v);
        prev = v;
    }
    if (table.ordinates.empty()) throw parse_error(path.string() + ": empty table");
    table.t_min = 0.0;  // imported first-N tables count from the origin
    table.t_max = table.ordinates.back();
    return table;
}

// ---------------------------------------------------------------------------
// ZTAB1 cache: magic "ZTAB1", u8 source, u8 verified, u8 reserved,
// u64 count, i64 count_offset, f64 t_min, f64 t_max, then count f64
// ordinates; all integers and doubles little-endian.

namespace detail {

inline void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

inline void put_f64(std::string& out, double d) {
    std::uint64_t v;
    std::memcpy(&v, &d, 8);
    put_u64(out, v);
}

inline std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

inline double get_f64(const unsigned char* p) {
    std::uint64_t v = get_u64(p);
    double d;
    std::memcpy(&d, &v, 8);
    return d;
}

}  // namespace detail

inline void save_ztab(const ZeroTable& table, const std::filesystem::path& path) {
    std::string buf;
    buf.reserve(40 + 8 * table.ordinates.size());
    buf.append("ZTAB1");
    buf.push_back(char(table.source));
    buf.push_back(table.verified ? 1 : 0);
    buf.push_back(0);
    detail::put_u64(buf, table.ordinates.size());
    detail::put_u64(buf, std::uint64_t(table.count_offset));
    detail::put_f64(buf, table.t_min);
    detail::put_f64(buf, table.t_max);
    for (double g : table.ordinates) detail::put_f64(buf, g);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write " + path.string());
    out.write(buf.data(), std::streamsize(buf.size()));
    if (!out) throw io_error("short write to " + path.string());
}

inline ZeroTable load_ztab(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    std::array<unsigned char, 40> head{};
    in.read(reinterpret_cast<char*>(head.data()), 40);
    if (in.gcount() != 40 || std::memcmp(head.data(), "ZTAB1", 5) != 0)
        throw parse_error(path.string() + ": not a ZTAB1 cache");
    ZeroTable table;
    table.source = zero_source(head[5]);
    table.verified = head[6] != 0;
    std::uint64_t count = detail::get_u64(head.data() + 8);
    table.count_offset = std::int64_t(detail::get_u64(head.data() + 16));
    table.t_min = detail::get_f64(head.data() + 24);
    table.t_max = detail::get_f64(head.data() + 32);
    table.ordinates.resize(count);
    std::vector<unsigned char> body(count * 8);
    in.read(reinterpret_cast<char*>(body.data()), std::streamsize(body.size()));
    if (std::uint64_t(in.gcount()) != body.size())
        throw parse_error(path.string() + ": truncated ZTAB1 cache");
    for (std::uint64_t i = 0; i < count; ++i)
        table.ordinates[i] = detail::get_f64(body.data() + 8 * i);
    table.ordinate_error =
        table.source == zero_source::imported ? 1e-9 : 1e-8;
    if (!std::is_sorted(table.ordinates.begin(), table.ordinates.end()))
        throw parse_error(path.string() + ": ordinates not sorted");
    return table;
}

}  // namespace zetalab
