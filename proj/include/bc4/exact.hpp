#pragma once

// Exact arithmetic: arbitrary-precision rationals and numbers of the form
// (a + b*sqrt(c)) / d.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "bc4/errors.hpp"

namespace bc4 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow10(unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

inline BigInt isqrt(const BigInt& x) {
    if (x < 0) throw ArgumentError("isqrt of a negative number");
    return boost::multiprecision::sqrt(x);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

/// x(x-1)/2, also for fractional x.
inline Rational binom2(const Rational& x) { return x * (x - 1) / 2; }

/// Rendered as "p/q" (always with a denominator).
inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Decimal rendering rounded half-up to `digits` places after the point.
inline std::string to_decimal(const Rational& r, unsigned digits) {
    const bool neg = r < 0;
    const Rational a = neg ? Rational(-r) : r;
    BigInt scaled = floor(a * Rational(pow10(digits)) + Rational(1, 2));
    std::string s = scaled.str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    return (neg && scaled != 0 ? "-" : "") + s;
}

/// sign(p + q*sqrt(c)) for c >= 0.
inline int sign_of_surd(const Rational& p, const Rational& q, const BigInt& c) {
    auto sgn = [](const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    if (q == 0 || c == 0) return sgn(p);
    const int sp = sgn(p), sq = sgn(q);
    if (sp >= 0 && sq >= 0) return 1;
    if (sp <= 0 && sq <= 0) return -1;
    const Rational diff = p * p - q * q * Rational(c);  // compare |p| with |q| sqrt(c)
    return sp > 0 ? sgn(diff) : -sgn(diff);
}

/// (a + b*sqrt(c)) / d with b >= 0, c >= 0, d > 0.
struct QuadraticSurd {
    BigInt a = 0;
    BigInt b = 0;
    BigInt c = 0;
    BigInt d = 1;

    /// -1, 0, 1 as this is less than, equal to, greater than r.
    int compare(const Rational& r) const {
        return sign_of_surd(Rational(a) - r * Rational(d), Rational(b), c);
    }

    BigInt floor() const { return floor_div(a + isqrt(b * b * c), d); }

    std::string to_decimal(unsigned digits) const {
        // round(v * 10^k) = floor((2*10^k*a + d + sqrt((2*10^k*b)^2 c)) / (2d))
        const BigInt scale = 2 * pow10(digits);
        const BigInt num = scale * a + d + isqrt(scale * b * scale * b * c);
        BigInt scaled = floor_div(num, 2 * d);
        std::string s = scaled.str();
        if (digits > 0) {
            if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
            s.insert(s.size() - digits, ".");
        }
        return s;
    }

    long double to_long_double() const {
        return (a.convert_to<long double>() + b.convert_to<long double>() * std::sqrt(c.convert_to<long double>())) /
               d.convert_to<long double>();
    }

    /// "(a + b*sqrt(c))/d"
    std::string str() const {
        return "(" + a.str() + " + " + b.str() + "*sqrt(" + c.str() + "))/" + d.str();
    }
};

} // namespace bc4
