#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mckay/quiver.hpp"

namespace mckay {

inline constexpr unsigned long long kMatrixEnumCap = 1ull << 24;
inline constexpr unsigned long long kGroupEnumCap = 1'000'000;

namespace fq {

inline int norm(long long x, int q) {
    int m = (int)(x % q);
    return m < 0 ? m + q : m;
}

inline int inv(int a, int q) {
    a = norm(a, q);
    if (a == 0) throw domain_error("division by zero in F_q");
    for (int x = 1; x < q; ++x)
        if (a * x % q == 1) return x;
    throw domain_error("q is not prime");
}

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    uint8_t& at(int i, int j) { return a[(size_t)i * cols + j]; }
    uint8_t at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

inline Matrix mul(const Matrix& x, const Matrix& y, int q) {
    if (x.cols != y.rows) throw internal_error("matrix shape mismatch");
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int xv = x.at(i, k);
            if (!xv) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = (uint8_t)((z.at(i, j) + xv * y.at(k, j)) % q);
        }
    return z;
}

// row echelon reduction in place; returns rank
inline int row_reduce(Matrix& m, int q) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.a[(size_t)piv * m.cols + j], m.a[(size_t)rank * m.cols + j]);
        int s = inv(m.at(rank, col), q);
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = (uint8_t)(m.at(rank, j) * s % q);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || !m.at(i, col)) continue;
            int f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = (uint8_t)((m.at(i, j) + (q - f) * m.at(rank, j)) % q);
        }
        ++rank;
    }
    return rank;
}

inline int rank_of(Matrix m, int q) { return row_reduce(m, q); }

inline bool invertible(const Matrix& m, int q) {
    return m.rows == m.cols && rank_of(m, q) == m.rows;
}

// Basis of the right nullspace, one solution vector per row.
inline Matrix nullspace(Matrix m, int q) {
    int n = m.cols;
    row_reduce(m, q);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j)) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    Matrix basis(0, n);
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<uint8_t> v(n, 0);
        v[freec] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = (uint8_t)((q - m.at((int)i, freec)) % q);
        basis.rows++;
        basis.a.insert(basis.a.end(), v.begin(), v.end());
    }
    return basis;
}

inline Matrix inverse(const Matrix& m, int q) {
    if (m.rows != m.cols) throw internal_error("inverse of non-square matrix");
    int n = m.rows;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    if (row_reduce(aug, q) != n) throw internal_error("matrix not invertible");
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

} // namespace fq

// Representation: one vector space dimension per quiver vertex and one
// matrix per arrow (rows = head dimension, cols = tail dimension).
struct FqRep {
    std::vector<int> dims;
    std::vector<fq::Matrix> mats;
};

inline long long total_cells(const Quiver& qv, const std::vector<int>& dims) {
    long long n = 0;
    for (auto& a : qv.arrows)
        n += (long long)dims[qv.vertex_index(a.head)] * dims[qv.vertex_index(a.tail)];
    return n;
}

inline FqRep zero_rep(const Quiver& qv, const std::vector<int>& dims) {
    FqRep r;
    r.dims = dims;
    for (auto& a : qv.arrows)
        r.mats.emplace_back(dims[qv.vertex_index(a.head)], dims[qv.vertex_index(a.tail)]);
    return r;
}

inline std::string serialize_rep(const FqRep& r) {
    std::string s;
    for (int d : r.dims) s += (char)('0' + d);
    s += ':';
    for (auto& m : r.mats)
        for (uint8_t x : m.a) s += (char)('0' + x);
    return s;
}

// dimension pairing <d,e> = sum_v d_v e_v - sum_{a:i->j} d_i e_j
inline long long euler_additive(const Quiver& qv, const std::vector<int>& d, const std::vector<int>& e) {
    long long s = 0;
    for (size_t i = 0; i < qv.num_vertices(); ++i) s += (long long)d[i] * e[i];
    for (auto& a : qv.arrows)
        s -= (long long)d[qv.vertex_index(a.tail)] * e[qv.vertex_index(a.head)];
    return s;
}

// ---------------------------------------------------------------------
// Hom / Ext via the intertwiner linear system

inline fq::Matrix intertwiner_system(const Quiver& qv, int q, const FqRep& A, const FqRep& B) {
    if (A.dims.size() != qv.num_vertices() || B.dims.size() != qv.num_vertices())
        throw domain_error("rep/quiver mismatch");
    std::vector<int> offset(qv.num_vertices() + 1, 0);
    for (size_t v = 0; v < qv.num_vertices(); ++v)
        offset[v + 1] = offset[v] + B.dims[v] * A.dims[v];
    int unknowns = offset.back();
    int rows = 0;
    for (auto& a : qv.arrows)
        rows += B.dims[qv.vertex_index(a.head)] * A.dims[qv.vertex_index(a.tail)];
    fq::Matrix sys(rows, unknowns);
    int row = 0;
    for (size_t ai = 0; ai < qv.arrows.size(); ++ai) {
        int t = qv.vertex_index(qv.arrows[ai].tail), h = qv.vertex_index(qv.arrows[ai].head);
        const fq::Matrix& Am = A.mats[ai];
        const fq::Matrix& Bm = B.mats[ai];
        // psi_h * A_a - B_a * psi_t = 0, equation indexed by (i, j)
        for (int i = 0; i < B.dims[h]; ++i)
            for (int j = 0; j < A.dims[t]; ++j, ++row) {
                for (int k = 0; k < A.dims[h]; ++k) // psi_h[i][k] * A[k][j]
                    sys.at(row, offset[h] + i * A.dims[h] + k) =
                        (uint8_t)((sys.at(row, offset[h] + i * A.dims[h] + k) + Am.at(k, j)) % q);
                for (int k = 0; k < B.dims[t]; ++k) // -B[i][k] * psi_t[k][j]
                    sys.at(row, offset[t] + k * A.dims[t] + j) =
                        (uint8_t)((sys.at(row, offset[t] + k * A.dims[t] + j) + (q - Bm.at(i, k))) % q);
            }
    }
    return sys;
}

inline long long hom_dim(const Quiver& qv, int q, const FqRep& A, const FqRep& B) {
    int unknowns = 0;
    for (size_t v = 0; v < qv.num_vertices(); ++v) unknowns += B.dims[v] * A.dims[v];
    if (unknowns == 0) return 0;
    fq::Matrix sys = intertwiner_system(qv, q, A, B);
    return unknowns - fq::rank_of(sys, q);
}

// Morphisms A -> B as per-vertex matrices, one per nullspace basis vector.
inline std::vector<std::vector<fq::Matrix>> hom_basis(const Quiver& qv, int q, const FqRep& A,
                                                      const FqRep& B) {
    std::vector<int> offset(qv.num_vertices() + 1, 0);
    for (size_t v = 0; v < qv.num_vertices(); ++v)
        offset[v + 1] = offset[v] + B.dims[v] * A.dims[v];
    fq::Matrix null = offset.back() ? fq::nullspace(intertwiner_system(qv, q, A, B), q)
                                    : fq::Matrix(0, 0);
    std::vector<std::vector<fq::Matrix>> basis;
    for (int r = 0; r < null.rows; ++r) {
        std::vector<fq::Matrix> phi;
        for (size_t v = 0; v < qv.num_vertices(); ++v) {
            fq::Matrix m(B.dims[v], A.dims[v]);
            for (int i = 0; i < B.dims[v]; ++i)
                for (int j = 0; j < A.dims[v]; ++j)
                    m.at(i, j) = null.at(r, offset[v] + i * A.dims[v] + j);
            phi.push_back(std::move(m));
        }
        basis.push_back(std::move(phi));
    }
    return basis;
}

inline long long ext1_dim(const Quiver& qv, int q, const FqRep& A, const FqRep& B) {
    std::string why;
    if (!detail::quiver_acyclic(qv, why)) throw domain_error("ext1_dim needs an acyclic quiver");
    long long e = hom_dim(qv, q, A, B) - euler_additive(qv, A.dims, B.dims);
    if (e < 0) throw internal_error("negative Ext^1 dimension");
    return e;
}

// ---------------------------------------------------------------------
// iso-class keys

namespace detail_fq {

inline bool is_linear_path(const Quiver& qv) {
    if (qv.num_vertices() == 0) return false;
    if (qv.arrows.size() + 1 != qv.num_vertices()) return false;
    for (size_t i = 0; i + 1 < qv.num_vertices(); ++i)
        if (!(qv.arrows[i].tail == qv.vertices[i] && qv.arrows[i].head == qv.vertices[i + 1]))
            return false;
    return true;
}

// Interval-module multiplicities of a linear A_n representation from the
// ranks of composite maps (inclusion-exclusion on persistence ranks).
inline std::map<std::pair<int, int>, long long> interval_multiplicities(const Quiver& qv, int q,
                                                                        const FqRep& rep) {
    int n = (int)qv.num_vertices();
    // r[i][j] = rank of the composite V_i -> V_j, 0-based, i <= j
    std::vector<std::vector<long long>> r(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        fq::Matrix acc = fq::Matrix::identity(rep.dims[i]);
        r[i][i] = rep.dims[i];
        for (int j = i + 1; j < n; ++j) {
            acc = fq::mul(rep.mats[j - 1], acc, q);
            r[i][j] = fq::rank_of(acc, q);
        }
    }
    auto R = [&](int i, int j) -> long long {
        if (i < 0 || j >= n || i > j) return 0;
        return r[i][j];
    };
    std::map<std::pair<int, int>, long long> mult;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long m = R(i, j) - R(i - 1, j) - R(i, j + 1) + R(i - 1, j + 1);
            if (m < 0) throw internal_error("negative interval multiplicity");
            if (m > 0) mult[{i, j}] = m;
        }
    return mult;
}

inline std::string interval_name(const Quiver& qv, int i, int j) {
    if (i == j) return "S" + std::to_string(qv.vertices[i]);
    return "M" + std::to_string(qv.vertices[i]) + "-" + std::to_string(qv.vertices[j]);
}

} // namespace detail_fq

struct RepEnumeration; // fwd

// Canonical iso-class key.  Linear quivers use the Krull-Schmidt interval
// decomposition (stable across q, which Hall-polynomial interpolation
// needs); other quivers use the lexicographically minimal orbit element.
inline std::string class_key(const Quiver& qv, int q, const FqRep& rep);

struct IsoClass {
    std::string key;
    FqRep rep;
    unsigned long long orbit_size = 0;
};

namespace detail_fq {

struct Generator {
    int vertex;
    fq::Matrix g, ginv;
};

inline std::vector<Generator> gl_generators(const Quiver& qv, const std::vector<int>& dims, int q) {
    std::vector<Generator> gens;
    for (size_t v = 0; v < qv.num_vertices(); ++v) {
        int d = dims[v];
        if (d == 0) continue;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                fq::Matrix g = fq::Matrix::identity(d);
                g.at(i, j) = 1;
                fq::Matrix gi = fq::Matrix::identity(d);
                gi.at(i, j) = (uint8_t)(q - 1);
                gens.push_back({(int)v, g, gi});
                gens.push_back({(int)v, gi, g});
            }
        for (int s = 2; s < q; ++s) {
            fq::Matrix g = fq::Matrix::identity(d);
            g.at(0, 0) = (uint8_t)s;
            fq::Matrix gi = fq::Matrix::identity(d);
            gi.at(0, 0) = (uint8_t)fq::inv(s, q);
            gens.push_back({(int)v, g, gi});
        }
    }
    return gens;
}

inline FqRep apply_generator(const Quiver& qv, int q, const FqRep& rep, const Generator& gen) {
    FqRep out = rep;
    for (size_t ai = 0; ai < qv.arrows.size(); ++ai) {
        int t = qv.vertex_index(qv.arrows[ai].tail), h = qv.vertex_index(qv.arrows[ai].head);
        if (h == gen.vertex) out.mats[ai] = fq::mul(gen.g, out.mats[ai], q);
        if (t == gen.vertex) out.mats[ai] = fq::mul(out.mats[ai], gen.ginv, q);
    }
    return out;
}

inline unsigned long long pow_ull(unsigned long long b, long long e, unsigned long long cap) {
    unsigned long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

inline unsigned long long rep_index(const FqRep& rep, int q) {
    unsigned long long idx = 0, mulr = 1;
    for (auto& m : rep.mats)
        for (uint8_t x : m.a) {
            idx += x * mulr;
            mulr *= q;
        }
    return idx;
}

inline FqRep rep_from_index(const Quiver& qv, const std::vector<int>& dims, int q,
                            unsigned long long idx) {
    FqRep rep = zero_rep(qv, dims);
    for (auto& m : rep.mats)
        for (auto& x : m.a) {
            x = (uint8_t)(idx % q);
            idx /= q;
        }
    return rep;
}

} // namespace detail_fq

// One representative per isomorphism class at the given dimension vector,
// with orbit sizes; ordered by key.
inline std::vector<IsoClass> enumerate_iso_classes(const Quiver& qv, const std::vector<int>& dims,
                                                   int q) {
    if (q < 2 || q > 7) throw domain_error("q must be a prime in [2,7]");
    long long cells = total_cells(qv, dims);
    unsigned long long space = detail_fq::pow_ull(q, cells, kMatrixEnumCap);
    if (space > kMatrixEnumCap)
        throw cap_exceeded("enumeration space q^" + std::to_string(cells) + " above cap");

    auto gens = detail_fq::gl_generators(qv, dims, q);
    std::vector<bool> visited(space, false);
    std::vector<IsoClass> classes;
    for (unsigned long long start = 0; start < space; ++start) {
        if (visited[start]) continue;
        // BFS the base-change orbit
        std::vector<unsigned long long> queue = {start};
        visited[start] = true;
        unsigned long long min_idx = start, size = 0;
        while (!queue.empty()) {
            unsigned long long cur = queue.back();
            queue.pop_back();
            ++size;
            FqRep rep = detail_fq::rep_from_index(qv, dims, q, cur);
            for (auto& gen : gens) {
                unsigned long long nxt = detail_fq::rep_index(detail_fq::apply_generator(qv, q, rep, gen), q);
                if (!visited[nxt]) {
                    visited[nxt] = true;
                    if (nxt < min_idx) min_idx = nxt;
                    queue.push_back(nxt);
                }
            }
        }
        IsoClass cls;
        cls.rep = detail_fq::rep_from_index(qv, dims, q, min_idx);
        cls.orbit_size = size;
        cls.key = class_key(qv, q, cls.rep);
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const IsoClass& a, const IsoClass& b) { return a.key < b.key; });
    return classes;
}

inline std::string class_key(const Quiver& qv, int q, const FqRep& rep) {
    bool zero_dims = true;
    for (int d : rep.dims) zero_dims &= d == 0;
    if (zero_dims) return "0";
    if (detail_fq::is_linear_path(qv)) {
        auto mult = detail_fq::interval_multiplicities(qv, q, rep);
        std::vector<std::string> parts;
        for (auto& [ij, m] : mult)
            for (long long c = 0; c < m; ++c)
                parts.push_back(detail_fq::interval_name(qv, ij.first, ij.second));
        std::sort(parts.begin(), parts.end());
        std::string key;
        for (auto& p : parts) key += (key.empty() ? "" : "+") + p;
        return key;
    }
    // canonical form: lexicographically minimal orbit element
    long long cells = total_cells(qv, rep.dims);
    unsigned long long space = detail_fq::pow_ull(q, cells, kMatrixEnumCap);
    if (space > kMatrixEnumCap) throw cap_exceeded("class_key: orbit space above cap");
    auto gens = detail_fq::gl_generators(qv, rep.dims, q);
    std::set<unsigned long long> seen;
    std::vector<unsigned long long> queue = {detail_fq::rep_index(rep, q)};
    seen.insert(queue[0]);
    unsigned long long min_idx = queue[0];
    while (!queue.empty()) {
        unsigned long long cur = queue.back();
        queue.pop_back();
        FqRep r = detail_fq::rep_from_index(qv, rep.dims, q, cur);
        for (auto& gen : gens) {
            unsigned long long nxt = detail_fq::rep_index(detail_fq::apply_generator(qv, q, r, gen), q);
            if (seen.insert(nxt).second) {
                if (nxt < min_idx) min_idx = nxt;
                queue.push_back(nxt);
            }
        }
    }
    std::string dims_tag;
    for (int d : rep.dims) dims_tag += (dims_tag.empty() ? "" : ".") + std::to_string(d);
    return "c" + dims_tag + ":" + std::to_string(min_idx);
}

// dimension vector named by a linear-quiver class key ("S1+M1-2" etc.)
inline std::vector<int> dims_of_linear_key(const Quiver& qv, const std::string& key) {
    std::vector<int> dims(qv.num_vertices(), 0);
    if (key == "0") return dims;
    std::stringstream ss(key);
    std::string part;
    auto vpos = [&](long long v) { return qv.vertex_index(v); };
    while (std::getline(ss, part, '+')) {
        if (part.empty()) throw domain_error("bad class key '" + key + "'");
        if (part[0] == 'S') {
            int v = vpos(std::stoll(part.substr(1)));
            dims[v]++;
        } else if (part[0] == 'M') {
            auto dash = part.find('-');
            if (dash == std::string::npos) throw domain_error("bad class key '" + key + "'");
            int i = vpos(std::stoll(part.substr(1, dash - 1)));
            int j = vpos(std::stoll(part.substr(dash + 1)));
            if (i > j) throw domain_error("bad interval in key '" + key + "'");
            for (int v = i; v <= j; ++v) dims[v]++;
        } else {
            throw domain_error("bad class key '" + key + "'");
        }
    }
    return dims;
}

// ---------------------------------------------------------------------
// subspace enumeration and Hall numbers

namespace detail_fq {

// All k-dimensional subspaces of F_q^d, each as a k x d RREF basis matrix.
inline std::vector<fq::Matrix> subspaces(int d, int k, int q) {
    std::vector<fq::Matrix> out;
    if (k < 0 || k > d) return out;
    if (k == 0) { out.emplace_back(0, d); return out; }
    std::vector<int> cols(k);
    // iterate pivot column combinations
    for (int i = 0; i < k; ++i) cols[i] = i;
    while (true) {
        // free positions: (row i, col j) with j > cols[i], j not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(d, false);
        for (int c : cols) is_pivot[c] = true;
        for (int i = 0; i < k; ++i)
            for (int j = cols[i] + 1; j < d; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        unsigned long long count = pow_ull(q, (long long)free_pos.size(), kMatrixEnumCap);
        if (count > kMatrixEnumCap) throw cap_exceeded("subspace enumeration above cap");
        for (unsigned long long code = 0; code < count; ++code) {
            fq::Matrix b(k, d);
            for (int i = 0; i < k; ++i) b.at(i, cols[i]) = 1;
            unsigned long long c = code;
            for (auto& [i, j] : free_pos) {
                b.at(i, j) = (uint8_t)(c % q);
                c /= q;
            }
            out.push_back(std::move(b));
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && cols[i] == d - k + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return out;
}

// membership of a column vector in the row space of an RREF basis
inline bool in_span(const fq::Matrix& basis, const std::vector<uint8_t>& vec, int q) {
    fq::Matrix m(basis.rows + 1, basis.cols);
    m.a.assign(basis.a.begin(), basis.a.end());
    m.a.insert(m.a.end(), vec.begin(), vec.end());
    return fq::rank_of(m, q) == basis.rows;
}

} // namespace detail_fq

// Sub/quotient pair cut out by per-vertex subspaces closed under the arrows.
struct SubQuot {
    FqRep sub, quot;
};

inline std::optional<SubQuot> restrict_to_subspaces(const Quiver& qv, int q, const FqRep& C,
                                                    const std::vector<fq::Matrix>& bases) {
    size_t nv = qv.num_vertices();
    // full basis per vertex: subspace rows then complement unit vectors
    std::vector<fq::Matrix> P(nv), Pinv(nv);
    std::vector<int> subdim(nv);
    for (size_t v = 0; v < nv; ++v) {
        int d = C.dims[v], k = bases[v].rows;
        subdim[v] = k;
        fq::Matrix full(d, d);
        std::vector<bool> pivot(d, false);
        for (int i = 0; i < k; ++i) {
            int pc = -1;
            for (int j = 0; j < d; ++j)
                if (bases[v].at(i, j)) { pc = j; break; }
            pivot[pc] = true;
            for (int j = 0; j < d; ++j) full.at(j, i) = bases[v].at(i, j); // columns = basis vectors
        }
        int c = k;
        for (int j = 0; j < d; ++j)
            if (!pivot[j]) {
                full.at(j, c) = 1;
                ++c;
            }
        if (d > 0 && !fq::invertible(full, q)) return std::nullopt;
        P[v] = full;
        Pinv[v] = d > 0 ? fq::inverse(full, q) : fq::Matrix(0, 0);
    }
    SubQuot sq;
    sq.sub.dims.resize(nv);
    sq.quot.dims.resize(nv);
    for (size_t v = 0; v < nv; ++v) {
        sq.sub.dims[v] = subdim[v];
        sq.quot.dims[v] = C.dims[v] - subdim[v];
    }
    for (size_t ai = 0; ai < qv.arrows.size(); ++ai) {
        int t = qv.vertex_index(qv.arrows[ai].tail), h = qv.vertex_index(qv.arrows[ai].head);
        // M in the adapted bases: block structure [[S, *], [0, Q]] required
        fq::Matrix m = C.dims[h] && C.dims[t]
                           ? fq::mul(Pinv[h], fq::mul(C.mats[ai], P[t], q), q)
                           : fq::Matrix(C.dims[h], C.dims[t]);
        int kh = subdim[h], kt = subdim[t];
        for (int i = kh; i < C.dims[h]; ++i)
            for (int j = 0; j < kt; ++j)
                if (m.at(i, j)) return std::nullopt; // not closed under this arrow
        fq::Matrix S(kh, kt), Q(C.dims[h] - kh, C.dims[t] - kt);
        for (int i = 0; i < kh; ++i)
            for (int j = 0; j < kt; ++j) S.at(i, j) = m.at(i, j);
        for (int i = kh; i < C.dims[h]; ++i)
            for (int j = kt; j < C.dims[t]; ++j) Q.at(i - kh, j - kt) = m.at(i, j);
        sq.sub.mats.push_back(std::move(S));
        sq.quot.mats.push_back(std::move(Q));
    }
    return sq;
}

// g^C_{A,B}: subrepresentations of C isomorphic to the sub class with
// quotient isomorphic to the quotient class.
inline long long subrep_count(const Quiver& qv, int q, const FqRep& C, const std::string& sub_key,
                              const std::vector<int>& sub_dims, const std::string& quot_key) {
    size_t nv = qv.num_vertices();
    std::vector<std::vector<fq::Matrix>> choices(nv);
    for (size_t v = 0; v < nv; ++v) {
        choices[v] = detail_fq::subspaces(C.dims[v], sub_dims[v], q);
        if (choices[v].empty()) return 0;
    }
    long long count = 0;
    std::vector<size_t> pick(nv, 0);
    while (true) {
        std::vector<fq::Matrix> bases;
        for (size_t v = 0; v < nv; ++v) bases.push_back(choices[v][pick[v]]);
        if (auto sq = restrict_to_subspaces(qv, q, C, bases)) {
            if (class_key(qv, q, sq->sub) == sub_key && class_key(qv, q, sq->quot) == quot_key)
                ++count;
        }
        size_t v = 0;
        while (v < nv && ++pick[v] == choices[v].size()) {
            pick[v] = 0;
            ++v;
        }
        if (v == nv) break;
    }
    return count;
}

// (|Aut A|, |End A|) by enumerating the endomorphism algebra.
inline std::pair<unsigned long long, unsigned long long> aut_end_orders(const Quiver& qv, int q,
                                                                        const FqRep& A) {
    auto basis = hom_basis(qv, q, A, A);
    long long h = (long long)basis.size();
    unsigned long long total = detail_fq::pow_ull(q, h, kGroupEnumCap);
    if (total > kGroupEnumCap) throw cap_exceeded("endomorphism enumeration above cap");
    unsigned long long aut = 0;
    size_t nv = qv.num_vertices();
    std::vector<int> coef(h, 0);
    for (unsigned long long code = 0; code < total; ++code) {
        unsigned long long c = code;
        for (long long i = 0; i < h; ++i) {
            coef[i] = (int)(c % q);
            c /= q;
        }
        bool inv_all = true;
        for (size_t v = 0; v < nv && inv_all; ++v) {
            int d = A.dims[v];
            if (d == 0) continue;
            fq::Matrix m(d, d);
            for (long long i = 0; i < h; ++i) {
                if (!coef[i]) continue;
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y)
                        m.at(x, y) = (uint8_t)((m.at(x, y) + coef[i] * basis[i][v].at(x, y)) % q);
            }
            inv_all = fq::invertible(m, q);
        }
        if (inv_all) ++aut;
    }
    return {aut, total};
}

// Direct count of short exact sequences 0 -> B -> C -> A -> 0 as pairs
// (injection, surjection) with image = kernel.  Oracle-grade, tiny dims only.
inline unsigned long long ses_count(const Quiver& qv, int q, const FqRep& B, const FqRep& C,
                                    const FqRep& A) {
    auto fb = hom_basis(qv, q, B, C);
    auto gb = hom_basis(qv, q, C, A);
    unsigned long long nf = detail_fq::pow_ull(q, (long long)fb.size(), kGroupEnumCap);
    unsigned long long ng = detail_fq::pow_ull(q, (long long)gb.size(), kGroupEnumCap);
    if (nf > kGroupEnumCap || ng > kGroupEnumCap || (nf && ng > kGroupEnumCap / nf))
        throw cap_exceeded("short-exact-sequence enumeration above cap");
    size_t nv = qv.num_vertices();

    auto materialize = [&](const std::vector<std::vector<fq::Matrix>>& basis, unsigned long long code,
                           const FqRep& from, const FqRep& to) {
        std::vector<fq::Matrix> phi;
        for (size_t v = 0; v < nv; ++v) phi.emplace_back(to.dims[v], from.dims[v]);
        unsigned long long c = code;
        for (size_t i = 0; i < basis.size(); ++i, c /= q) {
            int coef = (int)(c % q);
            if (!coef) continue;
            for (size_t v = 0; v < nv; ++v)
                for (size_t x = 0; x < phi[v].a.size(); ++x)
                    phi[v].a[x] = (uint8_t)((phi[v].a[x] + coef * basis[i][v].a[x]) % q);
        }
        return phi;
    };

    unsigned long long count = 0;
    for (unsigned long long cf = 0; cf < nf; ++cf) {
        auto f = materialize(fb, cf, B, C);
        bool inj = true;
        for (size_t v = 0; v < nv && inj; ++v)
            inj = fq::rank_of(f[v], q) == B.dims[v];
        if (!inj) continue;
        for (unsigned long long cg = 0; cg < ng; ++cg) {
            auto g = materialize(gb, cg, C, A);
            bool ok = true;
            for (size_t v = 0; v < nv && ok; ++v) {
                if (fq::rank_of(g[v], q) != A.dims[v]) { ok = false; break; }
                // im f_v == ker g_v: dimensions match and g_v * f_v = 0
                if (B.dims[v] + A.dims[v] != C.dims[v]) { ok = false; break; }
                fq::Matrix comp = fq::mul(g[v], f[v], q);
                for (uint8_t x : comp.a)
                    if (x) { ok = false; break; }
            }
            if (ok) ++count;
        }
    }
    return count;
}

// positive roots of a linear A_n quiver = interval dimension vectors
inline std::vector<std::vector<int>> positive_roots_linear(const Quiver& qv) {
    int n = (int)qv.num_vertices();
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<int> d(n, 0);
            for (int v = i; v <= j; ++v) d[v] = 1;
            roots.push_back(d);
        }
    return roots;
}

// number of multisets of positive roots summing to the degree
inline long long kostant_partition_count(const std::vector<std::vector<int>>& roots,
                                         const std::vector<int>& degree) {
    std::function<long long(size_t, std::vector<int>)> go = [&](size_t i,
                                                                std::vector<int> rem) -> long long {
        if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) return 1;
        if (i == roots.size()) return 0;
        long long total = 0;
        while (true) {
            total += go(i + 1, rem);
            for (size_t v = 0; v < rem.size(); ++v) rem[v] -= roots[i][v];
            if (std::any_of(rem.begin(), rem.end(), [](int x) { return x < 0; })) break;
        }
        return total;
    };
    return go(0, degree);
}

} // namespace mckay
