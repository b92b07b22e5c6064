#pragma once

#include <cstdint>
#include <stdexcept>

namespace multrans {

using nat = std::uint64_t;

// Arithmetic that rejects 64-bit overflow instead of wrapping.

inline nat checked_add(nat a, nat b) {
    nat r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("addition overflows 64-bit natural");
    return r;
}

inline nat checked_mul(nat a, nat b) {
    nat r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("multiplication overflows 64-bit natural");
    return r;
}

inline nat checked_pow(nat base, nat exponent) {
    nat r = 1;
    for (nat i = 0; i < exponent; ++i)
        r = checked_mul(r, base);
    return r;
}

}  // namespace multrans
