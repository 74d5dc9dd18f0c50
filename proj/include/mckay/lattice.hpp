#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mckay/errors.hpp"

namespace mckay {

using Vec3 = std::array<long long, 3>;

// Desk-scale guard: all lattice inputs are rejected beyond this order so
// that every determinant and cross product stays well inside int64.
inline constexpr long long kMaxOrder = 1'000'000;

inline Vec3 operator+(const Vec3& u, const Vec3& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }
inline Vec3 operator-(const Vec3& u, const Vec3& v) { return {u[0] - v[0], u[1] - v[1], u[2] - v[2]}; }
inline Vec3 operator*(long long c, const Vec3& v) { return {c * v[0], c * v[1], c * v[2]}; }

inline long long dot(const Vec3& u, const Vec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

// Exact 3x3 determinant of the rows u, v, w.
inline long long det3(const Vec3& u, const Vec3& v, const Vec3& w) {
    __int128 d = (__int128)u[0] * (v[1] * w[2] - v[2] * w[1])
               - (__int128)u[1] * (v[0] * w[2] - v[2] * w[0])
               + (__int128)u[2] * (v[0] * w[1] - v[1] * w[0]);
    if (d > INT64_MAX || d < INT64_MIN) throw domain_error("det3 overflow");
    return (long long)d;
}

inline long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c);
}

// Divide out the content and normalize the sign so the first nonzero
// entry is positive.  This pins down marking output deterministically.
inline Vec3 primitive_vector(const Vec3& v) {
    long long g = gcd3(v[0], v[1], v[2]);
    if (g == 0) throw domain_error("primitive_vector of zero vector");
    Vec3 p = {v[0] / g, v[1] / g, v[2] / g};
    for (long long x : p) {
        if (x > 0) break;
        if (x < 0) { p = {-p[0], -p[1], -p[2]}; break; }
    }
    return p;
}

// Hirzebruch-Jung sequence of r/a, every entry >= 2.
using HJSequence = std::vector<long long>;

inline HJSequence hj_expand(long long r, long long a) {
    if (r <= 0 || r > kMaxOrder) throw domain_error("hj_expand: order out of range");
    if (a <= 0 || a >= r) throw domain_error("hj_expand: need 0 < a < r");
    if (std::gcd(r, a) != 1) throw domain_error("hj_expand: gcd(r,a) != 1");
    HJSequence seq;
    while (a > 0) {
        long long q = (r + a - 1) / a; // ceil(r/a)
        seq.push_back(q);
        long long rem = q * a - r;     // next denominator
        r = a;
        a = rem;
    }
    return seq;
}

// Exact evaluation of a_1 - 1/(a_2 - ...), returned as reduced (r, a).
inline std::pair<long long, long long> hj_evaluate(const HJSequence& seq) {
    if (seq.empty()) throw domain_error("hj_evaluate: empty sequence");
    for (long long k : seq)
        if (k < 2) throw domain_error("hj_evaluate: entry < 2");
    long long num = seq.back(), den = 1;
    for (size_t i = seq.size() - 1; i-- > 0;) {
        long long n2 = seq[i] * num - den;
        den = num;
        num = n2;
        if (num > kMaxOrder * 4) throw domain_error("hj_evaluate overflow");
    }
    long long g = std::gcd(num, den);
    return {num / g, den / g};
}

inline std::string vec_str(const Vec3& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

} // namespace mckay
