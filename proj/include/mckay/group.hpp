#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/lattice.hpp"

namespace mckay {

// Character of Z/r, kept as the residue exponent j of chi_j.
using Character = long long;

// The cyclic group datum 1/r(w1,w2,w3) inside SL3.
struct GroupSpec {
    long long r = 1;
    Vec3 weights = {0, 0, 0};

    std::string str() const {
        return "1/" + std::to_string(r) + "(" + std::to_string(weights[0]) + "," +
               std::to_string(weights[1]) + "," + std::to_string(weights[2]) + ")";
    }
};

// Lattice point of the junior simplex: numerator triple over denominator r.
struct JuniorPoint {
    std::string id;     // "E1".. or "ex"/"ey"/"ez"
    Vec3 numerator = {0, 0, 0};
    long long r = 1;
    long long exponent = 0; // group element j, 0 for corners

    friend bool operator==(const JuniorPoint& a, const JuniorPoint& b) {
        return a.numerator == b.numerator && a.r == b.r;
    }
};

inline void validate_group(const GroupSpec& g) {
    if (g.r < 1) throw domain_error("group order must be >= 1");
    if (g.r > kMaxOrder) throw domain_error("group order above supported range");
    long long sum = g.weights[0] + g.weights[1] + g.weights[2];
    if (sum % g.r != 0)
        throw domain_error("weight sum " + std::to_string(sum) + " not divisible by r=" +
                           std::to_string(g.r) + " (not in SL3)");
    for (long long w : g.weights) {
        if (g.r > 1 && (w <= 0 || w >= g.r))
            throw domain_error("weight " + std::to_string(w) + " outside (0," + std::to_string(g.r) + ")");
        if (g.r == 1 && w != 0) throw domain_error("trivial group must have zero weights");
    }
    if (g.r > 1) {
        long long g4 = std::gcd(gcd3(g.weights[0], g.weights[1], g.weights[2]), g.r);
        if (g4 != 1) throw domain_error("gcd(w1,w2,w3,r) != 1 (non-faithful action)");
    }
}

// Grammar: 1/<r>(<w1>,<w2>,<w3>), whitespace tolerated anywhere.
inline GroupSpec parse_group(std::string_view text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos; };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw domain_error("group parse error at position " + std::to_string(pos) +
                               ": expected '" + std::string(1, c) + "'");
        ++pos;
    };
    auto number = [&]() -> long long {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start)
            throw domain_error("group parse error at position " + std::to_string(pos) +
                               ": expected number");
        if (pos - start > 9) throw domain_error("group parse error: number too large");
        return std::stoll(std::string(text.substr(start, pos - start)));
    };

    expect('1');
    expect('/');
    GroupSpec g;
    g.r = number();
    expect('(');
    g.weights[0] = number();
    expect(',');
    g.weights[1] = number();
    expect(',');
    g.weights[2] = number();
    expect(')');
    skip_ws();
    if (pos != text.size())
        throw domain_error("group parse error at position " + std::to_string(pos) + ": trailing input");
    if (g.r >= 1)
        for (auto& w : g.weights) w %= g.r;
    validate_group(g);
    return g;
}

inline Character monomial_character(const GroupSpec& g, const Vec3& exps) {
    for (long long e : exps)
        if (e < 0) throw domain_error("monomial exponents must be nonnegative");
    __int128 s = (__int128)exps[0] * g.weights[0] + (__int128)exps[1] * g.weights[1] +
                 (__int128)exps[2] * g.weights[2];
    return (Character)(s % g.r);
}

// Character of a (possibly negative) exponent vector; used for invariance
// checks where the vector is a difference of two monomials.
inline long long weight_pairing_mod_r(const GroupSpec& g, const Vec3& m) {
    __int128 s = (__int128)m[0] * g.weights[0] + (__int128)m[1] * g.weights[1] +
                 (__int128)m[2] * g.weights[2];
    long long v = (long long)(s % g.r);
    return v < 0 ? v + g.r : v;
}

// Exceptional divisors: points j*(w1,w2,w3) mod r with coordinate sum r,
// named E1, E2, ... in order of ascending exponent j.
inline std::vector<JuniorPoint> junior_points(const GroupSpec& g) {
    std::vector<JuniorPoint> pts;
    for (long long j = 1; j < g.r; ++j) {
        Vec3 n = {j * g.weights[0] % g.r, j * g.weights[1] % g.r, j * g.weights[2] % g.r};
        if (n[0] + n[1] + n[2] == g.r) {
            JuniorPoint p;
            p.numerator = n;
            p.r = g.r;
            p.exponent = j;
            pts.push_back(p);
        }
    }
    for (size_t i = 0; i < pts.size(); ++i) pts[i].id = "E" + std::to_string(i + 1);
    return pts;
}

inline std::array<JuniorPoint, 3> simplex_corners(const GroupSpec& g) {
    std::array<JuniorPoint, 3> c;
    const char* names[3] = {"ex", "ey", "ez"};
    for (int axis = 0; axis < 3; ++axis) {
        c[axis].id = names[axis];
        c[axis].numerator = {0, 0, 0};
        c[axis].numerator[axis] = g.r;
        c[axis].r = g.r;
    }
    return c;
}

// Parameters of the family 1/r(1,k,s): present when the weights are a
// permutation of (1,k,s) with k | s and (k+1) | s.
struct FamilyParams {
    long long k = 0, s = 0, r = 0, t = 0, ell = 0;
    int axis_one = 0, axis_k = 1, axis_s = 2; // which coordinate carries which weight

    long long gamma(long long n) const { return n * t - n * (n - 1); }

    // E-index of the last divisor on the n-th line of the s-axis corner fan
    // (the lines carrying chi_k, chi_{k-1}, ...).  The n-th line holds the
    // exponents ceil((n-1)r/k) .. n*t, so the cumulative count is the
    // geometric counterpart of the gamma sequence; the two agree exactly
    // when s = 2k(k+1).
    long long line_end(long long n) const {
        long long total = 0;
        for (long long i = 1; i <= n; ++i) {
            long long start = i == 1 ? 1 : ((i - 1) * r + k - 1) / k;
            total += i * t - start + 1;
        }
        return total;
    }

    std::string corner_of_axis(int axis) const {
        static const char* names[3] = {"ex", "ey", "ez"};
        return names[axis];
    }
    std::string corner_one() const { return corner_of_axis(axis_one); }
    std::string corner_k() const { return corner_of_axis(axis_k); }
    std::string corner_s() const { return corner_of_axis(axis_s); }
};

inline std::optional<FamilyParams> family_params(const GroupSpec& g) {
    if (g.r <= 1) return std::nullopt;
    // locate a weight equal to 1; the remaining two sorted give (k, s)
    for (int i = 0; i < 3; ++i) {
        if (g.weights[i] != 1) continue;
        int a = (i + 1) % 3, b = (i + 2) % 3;
        long long wa = g.weights[a], wb = g.weights[b];
        int axis_k = wa <= wb ? a : b;
        int axis_s = wa <= wb ? b : a;
        long long k = g.weights[axis_k], s = g.weights[axis_s];
        if (1 + k + s != g.r) continue;
        if (s % k != 0 || s % (k + 1) != 0) continue;
        FamilyParams fp;
        fp.k = k;
        fp.s = s;
        fp.r = g.r;
        fp.t = g.r / (k + 1);
        fp.ell = s / k;
        fp.axis_one = i;
        fp.axis_k = axis_k;
        fp.axis_s = axis_s;
        return fp;
    }
    return std::nullopt;
}

} // namespace mckay
