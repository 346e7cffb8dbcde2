#ifndef CROWNS_RATIONAL_HPP
#define CROWNS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "crowns/errors.hpp"

namespace crowns {

// Exact fraction over 64-bit integers, always stored reduced with a positive
// denominator. Intermediate products go through 128-bit arithmetic and throw
// OverflowError if a reduced result leaves the int64 range. Every bound value
// and weighted sum in this library is a Rational; no floating point is used
// in any check.
class Rational {
   public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long numerator, long long denominator = 1)
        : num_(numerator), den_(denominator) {
        if (den_ == 0) throw InvalidParameterError("Rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        return make(n, d);
    }
    Rational operator-(const Rational& o) const {
        __int128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        return make(n, d);
    }
    Rational operator*(const Rational& o) const {
        return make(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw InvalidParameterError("Rational: division by zero");
        return make(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational& o) const {
        __int128 lhs = i128(num_) * o.den_;
        __int128 rhs = i128(o.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Largest integer <= value (floor division, exact).
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    bool is_integer() const { return den_ == 1; }

    // Rendered as "p/q", reduced, q >= 1. Integers keep the "/1" so that CSV
    // cells stay uniformly parseable.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

   private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    static Rational make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = std::numeric_limits<long long>::min();
        constexpr __int128 hi = std::numeric_limits<long long>::max();
        if (n < lo || n > hi || d > hi)
            throw OverflowError("Rational: value outside 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_;
    long long den_;
};

}  // namespace crowns

#endif  // CROWNS_RATIONAL_HPP
