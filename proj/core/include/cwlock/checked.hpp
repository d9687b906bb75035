#pragma once

#include <cstdint>

#include "cwlock/errors.hpp"

// Overflow-checked 64-bit arithmetic. Every arithmetic path in the library
// goes through these; silent wraparound is never acceptable here.

namespace cwlock {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("u64 addition overflow");
    return r;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("u64 subtraction underflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("u64 multiplication overflow");
    return r;
}

// Signed difference of two u64 quantities, checked into int64.
inline std::int64_t checked_diff(std::uint64_t a, std::uint64_t b) {
    if (a >= b) {
        std::uint64_t d = a - b;
        if (d > static_cast<std::uint64_t>(INT64_MAX))
            throw overflow_error("difference exceeds int64");
        return static_cast<std::int64_t>(d);
    }
    std::uint64_t d = b - a;
    if (d > static_cast<std::uint64_t>(INT64_MAX))
        throw overflow_error("difference exceeds int64");
    return -static_cast<std::int64_t>(d);
}

}  // namespace cwlock
