#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

// fixed 17-significant-digit formatting so reruns are byte-identical
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class csv_writer {
public:
    csv_writer(const std::filesystem::path& path, const std::string& header)
        : out_(path, std::ios::trunc) {
        if (!out_) throw io_error("cannot write " + path.string());
        out_ << header << '\n';
    }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

}  // namespace zetalab
