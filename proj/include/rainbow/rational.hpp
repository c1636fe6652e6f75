#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace rainbow {

// Exact non-negative rational. Used wherever the quantities compared are
// exact counts (average degrees, epsilon thresholds) so that boundary cases
// do not depend on floating-point rounding.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { reduce(); }
    static Rational integer(long long n) { return Rational(n, 1); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// a*b <= c*d without overflow.
inline bool prod_le(long long a, long long b, long long c, long long d) {
    return static_cast<__int128>(a) * b <= static_cast<__int128>(c) * d;
}

// a*b*c <= x*y*z without overflow.
inline bool prod3_le(long long a, long long b, long long c, long long x, long long y, long long z) {
    return static_cast<__int128>(a) * b * c <= static_cast<__int128>(x) * y * z;
}

inline bool prod3_lt(long long a, long long b, long long c, long long x, long long y, long long z) {
    return static_cast<__int128>(a) * b * c < static_cast<__int128>(x) * y * z;
}

} // namespace rainbow
