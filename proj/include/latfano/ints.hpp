#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace latfano {

/// Exact signed integer used throughout. Arbitrary precision: arithmetic
/// never rounds, wraps, or overflows.
using Int = boost::multiprecision::cpp_int;

inline int sign(const Int& a) { return a.sign(); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Floor division (quotient rounded toward minus infinity). cpp_int's
/// operator/ truncates toward zero, which is the wrong reduction for
/// normal-form pivots.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

struct ExtGcd {
    Int g;  // gcd(a, b) >= 0
    Int x;  // x*a + y*b == g
    Int y;
};

/// Extended Euclid. g is nonnegative; for (0, 0) returns g = 0, x = y = 0.
inline ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

/// Checked narrowing for serialization; desk-scale values always fit.
inline std::int64_t to_int64(const Int& a) {
    if (a < std::numeric_limits<std::int64_t>::min() ||
        a > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("integer too large for int64 serialization");
    return a.convert_to<std::int64_t>();
}

}  // namespace latfano
