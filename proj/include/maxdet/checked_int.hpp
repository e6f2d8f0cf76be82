#pragma once

#include <cassert>
#include <cstdint>

#include "maxdet/errors.hpp"

namespace maxdet {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit subtract overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit multiply overflow");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw OverflowError("64-bit negate overflow");
    return -a;
}

// Division known to be exact (fraction-free elimination divides evenly).
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
    assert(b != 0);
    if (a == INT64_MIN && b == -1) throw OverflowError("64-bit divide overflow");
    assert(a % b == 0 && "division expected to be exact");
    return a / b;
}

// int64 wrapper whose arithmetic throws OverflowError instead of wrapping.
// Lets the generic elimination templates run identically over checked
// 64-bit and arbitrary-precision scalars.
struct Checked64 {
    std::int64_t v = 0;

    Checked64() = default;
    Checked64(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

    friend Checked64 operator+(Checked64 a, Checked64 b) { return checked_add(a.v, b.v); }
    friend Checked64 operator-(Checked64 a, Checked64 b) { return checked_sub(a.v, b.v); }
    friend Checked64 operator*(Checked64 a, Checked64 b) { return checked_mul(a.v, b.v); }
    friend Checked64 operator/(Checked64 a, Checked64 b) { return exact_div(a.v, b.v); }
    Checked64 operator-() const { return checked_neg(v); }
    Checked64& operator+=(Checked64 b) { v = checked_add(v, b.v); return *this; }

    friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
    friend auto operator<=>(Checked64 a, Checked64 b) { return a.v <=> b.v; }
};

}  // namespace maxdet
