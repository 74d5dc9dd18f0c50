#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "mckay/fqrep.hpp"
#include "mckay/rational.hpp"

namespace mckay {

// Element a + b*v of Q[v]/(v^2 - q).  For prime q this is the field
// Q(sqrt q), so Gaussian elimination over it is available.
struct VCoeff {
    Rational a, b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    std::string str() const { return a.str() + (b.is_zero() ? "" : "+" + b.str() + "v"); }

    friend bool operator==(const VCoeff& x, const VCoeff& y) { return x.a == y.a && x.b == y.b; }
};

inline VCoeff vc(long long n) { return {Rational(n), Rational(0)}; }
inline VCoeff vc_add(const VCoeff& x, const VCoeff& y) { return {x.a + y.a, x.b + y.b}; }
inline VCoeff vc_sub(const VCoeff& x, const VCoeff& y) { return {x.a - y.a, x.b - y.b}; }
inline VCoeff vc_neg(const VCoeff& x) { return {-x.a, -x.b}; }
inline VCoeff vc_mul(const VCoeff& x, const VCoeff& y, long long q) {
    return {x.a * y.a + Rational(q) * x.b * y.b, x.a * y.b + x.b * y.a};
}
inline VCoeff vc_scale(const VCoeff& x, const Rational& r) { return {x.a * r, x.b * r}; }
inline VCoeff vc_inv(const VCoeff& x, long long q) {
    Rational nrm = x.a * x.a - Rational(q) * x.b * x.b;
    if (nrm.is_zero()) throw domain_error("VCoeff has no inverse");
    return {x.a / nrm, -x.b / nrm};
}

// v^n as an element of Q[v]/(v^2-q); negative n uses v^-1 = v/q.
inline VCoeff v_power(long long n, long long q) {
    Rational base = n >= 0 ? Rational(q) : Rational(1, q);
    long long m = n >= 0 ? n : -n;
    Rational p(1);
    for (long long i = 0; i < m / 2; ++i) p = p * base;
    if (m % 2 == 0) return {p, Rational(0)};
    if (n > 0) return {Rational(0), p};             // v^m = q^{(m-1)/2} v
    return {Rational(0), p * Rational(1, q)};       // v^-m = q^{-(m+1)/2} v
}

// Gaussian binomial (n over m)_q with integer entries via the Pascal rule.
inline long long gaussian_binomial(int n, int m, long long q) {
    if (m < 0 || m > n) return 0;
    std::vector<std::vector<long long>> g(n + 1, std::vector<long long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        g[i][0] = 1;
        for (int j = 1; j <= i; ++j) {
            long long qp = 1;
            for (int t = 0; t < j; ++t) qp *= q;
            g[i][j] = (i == j) ? 1 : g[i - 1][j - 1] + qp * g[i - 1][j];
        }
    }
    return g[n][m];
}

// quantum binomial [n over m]_v = v^{-m(n-m)} (n over m)_q
inline VCoeff quantum_binomial(int n, int m, long long q) {
    VCoeff p = v_power(-(long long)m * (n - m), q);
    return vc_scale(p, Rational(gaussian_binomial(n, m, q)));
}

enum class HallMode { Ringel, Paper };

struct HallElement {
    std::map<std::string, VCoeff> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add(const std::string& key, const VCoeff& c, long long q) {
        (void)q;
        auto it = coeffs.find(key);
        VCoeff nc = it == coeffs.end() ? c : vc_add(it->second, c);
        if (nc.is_zero()) {
            if (it != coeffs.end()) coeffs.erase(it);
        } else {
            coeffs[key] = nc;
        }
    }
    friend bool operator==(const HallElement& x, const HallElement& y) {
        return x.coeffs == y.coeffs;
    }
};

// Ambient data for Hall computations over one (quiver, q): iso-class
// tables per dimension vector and memoized Hall numbers.
class HallContext {
  public:
    HallContext(Quiver quiver, int q) : quiver_(std::move(quiver)), q_(q) {
        std::string why;
        if (!detail::quiver_acyclic(quiver_, why))
            throw domain_error("Hall context needs an acyclic quiver: " + why);
        linear_ = detail_fq::is_linear_path(quiver_);
    }

    const Quiver& quiver() const { return quiver_; }
    int q() const { return q_; }
    bool linear() const { return linear_; }

    const std::vector<IsoClass>& classes_at(const std::vector<int>& dims) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = classes_.find(dims);
        if (it != classes_.end()) return it->second;
        auto cls = enumerate_iso_classes(quiver_, dims, q_);
        for (auto& c : cls) info_.insert({c.key, c});
        return classes_.emplace(dims, std::move(cls)).first->second;
    }

    const IsoClass& info(const std::string& key) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = info_.find(key);
            if (it != info_.end()) return it->second;
        }
        // derive the dimension vector from the key so the class table for
        // that degree can be built on demand
        std::vector<int> dims;
        if (key == "0") {
            dims.assign(quiver_.num_vertices(), 0);
        } else if (key[0] == 'c') {
            auto colon = key.find(':');
            if (colon == std::string::npos) throw domain_error("unknown class key '" + key + "'");
            std::stringstream ss(key.substr(1, colon - 1));
            std::string part;
            while (std::getline(ss, part, '.')) dims.push_back(std::stoi(part));
            if (dims.size() != quiver_.num_vertices())
                throw domain_error("unknown class key '" + key + "'");
        } else if (linear_) {
            dims = dims_of_linear_key(quiver_, key);
        } else {
            throw domain_error("unknown class key '" + key + "'");
        }
        classes_at(dims);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = info_.find(key);
        if (it == info_.end()) throw domain_error("unknown class key '" + key + "'");
        return it->second;
    }

    std::string simple_key(long long vertex) {
        std::vector<int> dims(quiver_.num_vertices(), 0);
        dims[quiver_.vertex_index(vertex)] = 1;
        return class_key(quiver_, q_, zero_rep(quiver_, dims));
    }

    long long hall_number(const std::string& c_key, const std::string& quot_key,
                          const std::string& sub_key) {
        auto memo_key = c_key + "|" + quot_key + "|" + sub_key;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = hall_memo_.find(memo_key);
            if (it != hall_memo_.end()) return it->second;
        }
        const IsoClass& C = info(c_key);
        const IsoClass& B = info(sub_key);
        long long g = subrep_count(quiver_, q_, C.rep, sub_key, B.rep.dims, quot_key);
        std::lock_guard<std::mutex> lock(mu_);
        hall_memo_[memo_key] = g;
        return g;
    }

    std::pair<unsigned long long, unsigned long long> aut_end(const std::string& key) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = aut_end_memo_.find(key);
            if (it != aut_end_memo_.end()) return it->second;
        }
        auto ae = aut_end_orders(quiver_, q_, info(key).rep);
        std::lock_guard<std::mutex> lock(mu_);
        aut_end_memo_[key] = ae;
        return ae;
    }

  private:
    Quiver quiver_;
    int q_;
    bool linear_ = false;
    std::mutex mu_;
    std::map<std::vector<int>, std::vector<IsoClass>> classes_;
    std::map<std::string, IsoClass> info_;
    std::map<std::string, long long> hall_memo_;
    std::map<std::string, std::pair<unsigned long long, unsigned long long>> aut_end_memo_;
};

// multiplicative Euler form on basis classes, a power of v
inline VCoeff euler_pairing(HallContext& ctx, const std::string& a_key, const std::string& b_key) {
    auto da = ctx.info(a_key).rep.dims, db = ctx.info(b_key).rep.dims;
    return v_power(euler_additive(ctx.quiver(), da, db), ctx.q());
}

// [A] * [B] = v^{<dimA,dimB>} sum_C (coefficient) [C], where the sum runs
// over classes at dim A + dim B.  Ringel mode uses the Hall number g;
// paper mode uses g |Aut A||Aut B| / (|End A||End B|).
inline HallElement hall_product(HallContext& ctx, const HallElement& x, const HallElement& y,
                                HallMode mode = HallMode::Ringel) {
    HallElement out;
    long long q = ctx.q();
    for (auto& [ak, ac] : x.coeffs) {
        auto da = ctx.info(ak).rep.dims;
        for (auto& [bk, bc] : y.coeffs) {
            auto db = ctx.info(bk).rep.dims;
            std::vector<int> dsum(da.size());
            for (size_t i = 0; i < da.size(); ++i) dsum[i] = da[i] + db[i];
            VCoeff twist = v_power(euler_additive(ctx.quiver(), da, db), q);
            VCoeff pair_c = vc_mul(vc_mul(ac, bc, q), twist, q);
            for (auto& C : ctx.classes_at(dsum)) {
                long long g = ctx.hall_number(C.key, ak, bk);
                if (g == 0) continue;
                VCoeff coef = vc_scale(pair_c, Rational(g));
                if (mode == HallMode::Paper) {
                    auto [autA, endA] = ctx.aut_end(ak);
                    auto [autB, endB] = ctx.aut_end(bk);
                    coef = vc_scale(coef, Rational((long long)(autA * autB),
                                                   (long long)(endA * endB)));
                }
                out.add(C.key, coef, q);
            }
        }
    }
    return out;
}

inline HallElement hall_basis(HallContext& ctx, const std::string& key) {
    ctx.info(key);
    HallElement e;
    e.coeffs[key] = vc(1);
    return e;
}

inline HallElement hall_power(HallContext& ctx, const HallElement& x, int n, HallMode mode) {
    HallElement acc = hall_basis(ctx, "0");
    for (int i = 0; i < n; ++i) acc = hall_product(ctx, acc, x, mode);
    return acc;
}

struct SerreReport {
    bool holds = false;
    HallElement residual;
    int relation_degree = 0; // 1 - a_ij
};

// Quantum Serre relation between the simple classes at vertices i and j:
// sum_m (-1)^m [1-a_ij over m]_v [S_i]^{1-a_ij-m} [S_j] [S_i]^m = 0.
inline SerreReport serre_check(HallContext& ctx, long long vi, long long vj,
                               HallMode mode = HallMode::Ringel) {
    if (vi == vj) throw domain_error("serre_check needs distinct vertices");
    int edges = 0;
    for (auto& a : ctx.quiver().arrows)
        if ((a.tail == vi && a.head == vj) || (a.tail == vj && a.head == vi)) ++edges;
    int aij = -edges;
    int N = 1 - aij;
    SerreReport rep;
    rep.relation_degree = N;
    HallElement si = hall_basis(ctx, ctx.simple_key(vi));
    HallElement sj = hall_basis(ctx, ctx.simple_key(vj));
    HallElement sum;
    long long q = ctx.q();
    for (int m = 0; m <= N; ++m) {
        HallElement term = hall_power(ctx, si, N - m, mode);
        term = hall_product(ctx, term, sj, mode);
        term = hall_product(ctx, term, hall_power(ctx, si, m, mode), mode);
        VCoeff c = quantum_binomial(N, m, q);
        if (m % 2 == 1) c = vc_neg(c);
        for (auto& [k, tc] : term.coeffs) sum.add(k, vc_mul(c, tc, q), q);
    }
    rep.residual = sum;
    rep.holds = sum.is_zero();
    return rep;
}

struct GradedDimReport {
    long long hall_dim = 0;
    long long kostant_count = 0;
    bool equal = false;
};

// Rank of the span of all products of simple classes in a fixed multidegree
// against the Kostant count of positive-root multisets.
inline GradedDimReport graded_dimension_check(HallContext& ctx, const std::vector<int>& degree) {
    if (!ctx.linear())
        throw domain_error("graded_dimension_check supports finite-type linear quivers");
    size_t nv = ctx.quiver().num_vertices();
    if (degree.size() != nv) throw domain_error("degree size mismatch");
    for (int d : degree)
        if (d < 0) throw domain_error("degree entries must be nonnegative");

    // all words in the simples with the given multidegree
    std::vector<HallElement> products;
    std::vector<int> rem = degree;
    std::vector<long long> word;
    std::function<void()> gen = [&]() {
        if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) {
            HallElement e = hall_basis(ctx, "0");
            for (long long v : word)
                e = hall_product(ctx, e, hall_basis(ctx, ctx.simple_key(v)), HallMode::Ringel);
            products.push_back(std::move(e));
            return;
        }
        for (size_t i = 0; i < nv; ++i) {
            if (rem[i] == 0) continue;
            rem[i]--;
            word.push_back(ctx.quiver().vertices[i]);
            gen();
            word.pop_back();
            rem[i]++;
        }
    };
    gen();

    // column index per class key
    std::map<std::string, int> col;
    for (auto& e : products)
        for (auto& [k, c] : e.coeffs)
            if (!col.count(k)) {
                int idx = (int)col.size();
                col[k] = idx;
            }
    // Gaussian elimination over Q(sqrt q)
    long long q = ctx.q();
    std::vector<std::vector<VCoeff>> rows;
    for (auto& e : products) {
        std::vector<VCoeff> row(col.size(), vc(0));
        for (auto& [k, c] : e.coeffs) row[col[k]] = c;
        rows.push_back(std::move(row));
    }
    long long rank = 0;
    size_t ncols = col.size();
    size_t rpos = 0;
    for (size_t c = 0; c < ncols && rpos < rows.size(); ++c) {
        size_t piv = rpos;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rpos]);
        VCoeff inv = vc_inv(rows[rpos][c], q);
        for (size_t j = 0; j < ncols; ++j) rows[rpos][j] = vc_mul(rows[rpos][j], inv, q);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rpos || rows[i][c].is_zero()) continue;
            VCoeff f = rows[i][c];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = vc_sub(rows[i][j], vc_mul(f, rows[rpos][j], q));
        }
        ++rpos;
        ++rank;
    }

    GradedDimReport rep;
    rep.hall_dim = rank;
    rep.kostant_count =
        kostant_partition_count(positive_roots_linear(ctx.quiver()), degree);
    rep.equal = rep.hall_dim == rep.kostant_count;
    return rep;
}

struct HallPolynomial {
    std::vector<Rational> coeffs; // ascending powers of q
    Rational at(const Rational& x) const {
        Rational acc(0), p(1);
        for (auto& c : coeffs) {
            acc = acc + c * p;
            p = p * x;
        }
        return acc;
    }
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero() && coeffs.size() > 1) continue;
            if (!s.empty()) s += " + ";
            s += coeffs[i].str();
            if (i == 1) s += "*q";
            if (i > 1) s += "*q^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }
};

// Lagrange interpolation of the Hall number g^C_{A,B}(q) over sample
// primes, validated on a held-out prime.  The value at q = 1 realizes the
// Euler-characteristic structure constant.
inline HallPolynomial hall_polynomial_interpolate(const Quiver& quiver, const std::string& a_key,
                                                  const std::string& b_key, const std::string& c_key,
                                                  std::vector<int> q_list = {2, 3, 5, 7}) {
    if (!detail_fq::is_linear_path(quiver))
        throw domain_error("hall_polynomial_interpolate supports finite-type linear quivers");
    if (q_list.size() < 2) throw domain_error("need at least two sample points");
    int held_out = q_list.back();
    q_list.pop_back();

    auto value_at = [&](int q) -> long long {
        HallContext ctx(quiver, q);
        return ctx.hall_number(c_key, a_key, b_key);
    };

    std::vector<std::pair<long long, long long>> samples;
    for (int q : q_list) samples.emplace_back(q, value_at(q));

    // Lagrange in coefficient form
    size_t n = samples.size();
    std::vector<Rational> coeffs(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j)/(x_i - x_j)
        std::vector<Rational> poly = {Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (size_t t = 0; t < poly.size(); ++t) {
                next[t + 1] = next[t + 1] + poly[t];
                next[t] = next[t] - poly[t] * Rational(samples[j].first);
            }
            poly = next;
            denom = denom * (Rational(samples[i].first) - Rational(samples[j].first));
        }
        Rational scale = Rational(samples[i].second) / denom;
        for (size_t t = 0; t < poly.size(); ++t) coeffs[t] = coeffs[t] + poly[t] * scale;
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();

    HallPolynomial hp;
    hp.coeffs = coeffs;
    long long check = value_at(held_out);
    if (hp.at(Rational(held_out)) != Rational(check))
        throw internal_error("hall polynomial fails held-out validation at q=" +
                             std::to_string(held_out));
    return hp;
}

struct AssociativityReport {
    HallMode mode;
    long long triples_checked = 0;
    long long failures = 0;
    std::string example_failure;
};

// (x*y)*z vs x*(y*z) over all class triples with total dimension <= bound.
inline AssociativityReport associativity_audit(HallContext& ctx, int total_dim_bound,
                                               HallMode mode) {
    size_t nv = ctx.quiver().num_vertices();
    std::vector<std::string> keys;
    std::vector<std::vector<int>> dims_list;
    std::function<void(std::vector<int>&, size_t, int)> gen = [&](std::vector<int>& d, size_t i,
                                                                  int rem) {
        if (i == nv) {
            if (std::any_of(d.begin(), d.end(), [](int x) { return x > 0; })) dims_list.push_back(d);
            return;
        }
        for (int x = 0; x <= rem; ++x) {
            d[i] = x;
            gen(d, i + 1, rem - x);
        }
        d[i] = 0;
    };
    std::vector<int> d(nv, 0);
    gen(d, 0, total_dim_bound);
    std::map<std::string, int> total_of;
    for (auto& dv : dims_list) {
        int tot = 0;
        for (int x : dv) tot += x;
        for (auto& cls : ctx.classes_at(dv)) {
            keys.push_back(cls.key);
            total_of[cls.key] = tot;
        }
    }
    std::sort(keys.begin(), keys.end());

    AssociativityReport rep;
    rep.mode = mode;
    for (auto& xk : keys)
        for (auto& yk : keys)
            for (auto& zk : keys) {
                if (total_of[xk] + total_of[yk] + total_of[zk] > total_dim_bound) continue;
                HallElement X = hall_basis(ctx, xk), Y = hall_basis(ctx, yk), Z = hall_basis(ctx, zk);
                HallElement left = hall_product(ctx, hall_product(ctx, X, Y, mode), Z, mode);
                HallElement right = hall_product(ctx, X, hall_product(ctx, Y, Z, mode), mode);
                rep.triples_checked++;
                if (!(left == right)) {
                    rep.failures++;
                    if (rep.example_failure.empty())
                        rep.example_failure = "(" + xk + ")*(" + yk + ")*(" + zk + ")";
                }
            }
    return rep;
}

} // namespace mckay
