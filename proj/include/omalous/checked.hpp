#pragma once

#include <cstdint>

#include "omalous/error.hpp"

namespace omalous::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw DomainError("Overflow", "integer overflow in addition");
    return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw DomainError("Overflow", "integer overflow in subtraction");
    return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw DomainError("Overflow", "integer overflow in multiplication");
    return out;
}

}  // namespace omalous::checked
