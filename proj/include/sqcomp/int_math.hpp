#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "sqcomp/errors.hpp"

namespace sqcomp {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("u64 addition overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("u64 multiplication overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline i64 checked_signed(u64 a) {
    if (a > static_cast<u64>(std::numeric_limits<i64>::max()))
        throw OverflowError("value does not fit in i64: " + std::to_string(a));
    return static_cast<i64>(a);
}

// floor(sqrt(n)), exact for the whole u64 range.
constexpr u64 isqrt(u64 n) noexcept {
    // Digit-by-digit method; no intermediate exceeds n.
    u64 result = 0;
    u64 bit = u64{1} << 62;
    while (bit > n)
        bit >>= 2;
    while (bit != 0) {
        if (n >= result + bit) {
            n -= result + bit;
            result = (result >> 1) + bit;
        } else {
            result >>= 1;
        }
        bit >>= 2;
    }
    return result;
}

constexpr bool is_square(u64 n) noexcept {
    u64 r = isqrt(n);
    return r * r == n;
}

// Smallest k >= 0 with k*k >= n.
constexpr u64 ceil_sqrt(u64 n) noexcept {
    u64 r = isqrt(n);
    return r * r == n ? r : r + 1;
}

}  // namespace sqcomp
