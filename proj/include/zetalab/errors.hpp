#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Precondition violations (bad argument, range not covered): CLI exit 2.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// Property / budget violations (identity residual over budget, internal
// consistency failure, unresolved sign-change interval): CLI exit 3.
struct property_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct consistency_error : property_error {
    using property_error::property_error;
};

struct unresolved_interval_error : property_error {
    double lo, hi;
    unresolved_interval_error(double lo_, double hi_, const std::string& what)
        : property_error(what), lo(lo_), hi(hi_) {}
};

// I/O and parse failures: CLI exit 4.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zetalab
