#pragma once

#include <cstdint>
#include <stdexcept>

namespace modpart {

// Exact 64-bit arithmetic; wrapping is never acceptable, so overflow throws.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("checked_add: 64-bit overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("checked_mul: 64-bit overflow");
    return r;
}

}  // namespace modpart
