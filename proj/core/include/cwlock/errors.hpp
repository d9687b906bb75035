#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwlock {

// Checked integer arithmetic exceeded 64 bits.
struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A forward scan reached its index cap without finishing.
struct cap_exceeded_error : std::runtime_error {
    cap_exceeded_error(std::string msg, std::uint64_t cap_)
        : std::runtime_error(std::move(msg)), cap(cap_) {}
    std::uint64_t cap;
};

// Breadth-first search reached its depth cap without a match.
struct depth_exceeded_error : std::runtime_error {
    depth_exceeded_error(std::string msg, unsigned depth_cap_)
        : std::runtime_error(std::move(msg)), depth_cap(depth_cap_) {}
    unsigned depth_cap;
};

// A pi-table does not cover a denominator the caller needs.
struct coverage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pi-table file failed validation; `line` is 1-based.
struct table_format_error : std::runtime_error {
    table_format_error(std::string msg, std::size_t line_)
        : std::runtime_error(std::move(msg)), line(line_) {}
    std::size_t line;
};

}  // namespace cwlock
