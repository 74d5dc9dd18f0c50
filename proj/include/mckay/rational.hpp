#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "mckay/errors.hpp"

namespace mckay {

// Exact rational on 64-bit numerator/denominator, always reduced,
// denominator > 0.  Intermediate products go through __int128.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        const __int128 lim = (__int128)INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw domain_error("rational overflow");
        Rational r;
        r.num = (long long)n;
        r.den = (long long)d;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return from128((__int128)x.num * y.den + (__int128)y.num * x.den,
                       (__int128)x.den * y.den);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return from128((__int128)x.num * y.den - (__int128)y.num * x.den,
                       (__int128)x.den * y.den);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from128((__int128)x.num * y.num, (__int128)x.den * y.den);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num == 0) throw domain_error("rational division by zero");
        return from128((__int128)x.num * y.den, (__int128)x.den * y.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return (__int128)x.num * y.den < (__int128)y.num * x.den;
    }
    friend bool operator<=(const Rational& x, const Rational& y) { return x < y || x == y; }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator>=(const Rational& x, const Rational& y) { return y <= x; }

    bool is_zero() const { return num == 0; }
    double to_double() const { return (double)num / (double)den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Fixed-point decimal rendering with trailing zeros stripped ("10.5",
// "2.666667", "-1").  Used for CSV fields that hold exact rationals.
inline std::string decimal_string(const Rational& r, int places = 6) {
    long long scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    __int128 v = (__int128)r.num * scale;
    bool neg = v < 0;
    if (neg) v = -v;
    // round half away from zero
    __int128 q = (v + r.den / 2) / r.den;
    long long ip = (long long)(q / scale);
    long long fp = (long long)(q % scale);
    std::string s = (neg ? "-" : "") + std::to_string(ip);
    if (fp != 0) {
        std::string f = std::to_string(fp);
        f.insert(f.begin(), places - (int)f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        s += "." + f;
    }
    return s;
}

} // namespace mckay
