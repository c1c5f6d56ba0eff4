#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "sturmpart/errors.hpp"

namespace sturmpart {

using i128 = __int128;
using u128 = unsigned __int128;

// All arithmetic that can leave the 128-bit range throws resource_limit_error
// instead of wrapping. Partition powers and convergent depths are capped well
// below the point where this fires for sane inputs.

inline i128 checked_add(i128 a, i128 b) {
    i128 out;
    if (__builtin_add_overflow(a, b, &out))
        throw resource_limit_error("128-bit integer overflow in addition");
    return out;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 out;
    if (__builtin_sub_overflow(a, b, &out))
        throw resource_limit_error("128-bit integer overflow in subtraction");
    return out;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw resource_limit_error("128-bit integer overflow in multiplication");
    return out;
}

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline int sign128(i128 x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor division (rounds toward negative infinity); b != 0.
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    i128 r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline i128 mod_floor(i128 a, i128 b) { return a - floor_div(a, b) * b; }

// Integer square root of a non-negative value.
inline u128 isqrt128(u128 x) {
    if (x == 0) return 0;
    u128 s = (u128)__builtin_sqrtl((long double)x);
    if (s == 0) s = 1;
    while (s > x / s) --s;
    while ((s + 1) <= x / (s + 1)) ++s;
    return s;
}

inline bool is_perfect_square(i128 x) {
    if (x < 0) return false;
    u128 s = isqrt128((u128)x);
    return (i128)(s * s) == x;
}

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? (u128)(-(v + 1)) + 1 : (u128)v;
    std::string out;
    while (u > 0) {
        out.push_back(char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

inline i128 parse_i128(std::string_view s) {
    if (s.empty()) throw input_error("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw input_error("bad integer literal: '" + std::string(s) + "'");
    i128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw input_error("bad integer literal: '" + std::string(s) + "'");
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

inline double to_double(i128 v) {
    // Exact for |v| < 2^53; otherwise rounded, which is fine for the
    // floating filters (they carry explicit error bounds).
    return (double)v;
}

} // namespace sturmpart
