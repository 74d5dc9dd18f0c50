#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

struct Arrow {
    long long tail = 0;
    long long head = 0;
    int weight = 0; // 1..3 names which group weight; 0 for abstract quivers

    friend bool operator<(const Arrow& a, const Arrow& b) {
        return std::tie(a.tail, a.head, a.weight) < std::tie(b.tail, b.head, b.weight);
    }
    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.tail == b.tail && a.head == b.head && a.weight == b.weight;
    }
};

struct Quiver {
    long long r = 0; // modulus of the character vertices; 0 for abstract quivers
    std::vector<long long> vertices; // sorted
    std::vector<Arrow> arrows;       // sorted

    bool has_vertex(long long v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    int vertex_index(long long v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) throw domain_error("unknown vertex " + std::to_string(v));
        return (int)(it - vertices.begin());
    }
    size_t num_vertices() const { return vertices.size(); }
};

// McKay quiver of 1/r(w1,w2,w3): vertices are the characters, one arrow
// m -> m + w_i for each weight.
inline Quiver build_mckay_quiver(const GroupSpec& g) {
    validate_group(g);
    Quiver q;
    q.r = g.r;
    for (long long v = 0; v < g.r; ++v) q.vertices.push_back(v);
    for (long long v = 0; v < g.r; ++v)
        for (int i = 0; i < 3; ++i)
            q.arrows.push_back({v, (v + g.weights[i]) % g.r, i + 1});
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

// Two-weight analogue on characters of Z/n acting on the plane by
// (eps, eps^-1); reproduces the classical cyclic double-cycle quiver.
inline Quiver build_mckay_quiver_2d(long long n) {
    if (n < 1 || n > kMaxOrder) throw domain_error("order out of range");
    Quiver q;
    q.r = n;
    for (long long v = 0; v < n; ++v) q.vertices.push_back(v);
    for (long long v = 0; v < n; ++v) {
        q.arrows.push_back({v, (v + 1) % n, 1});
        q.arrows.push_back({v, (v + n - 1) % n, 2});
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

// Linear orientation of the Dynkin quiver A_n: 1 -> 2 -> ... -> n.
inline Quiver line_quiver(int n) {
    if (n < 1) throw domain_error("line quiver needs >= 1 vertex");
    Quiver q;
    for (int v = 1; v <= n; ++v) q.vertices.push_back(v);
    for (int v = 1; v < n; ++v) q.arrows.push_back({v, v + 1, 0});
    return q;
}

inline Quiver kronecker_quiver() {
    Quiver q;
    q.vertices = {1, 2};
    q.arrows = {{1, 2, 0}, {1, 2, 0}};
    return q;
}

inline Quiver extract_subquiver(const Quiver& q, const std::vector<long long>& vertex_set) {
    Quiver sub;
    sub.r = q.r;
    sub.vertices = vertex_set;
    std::sort(sub.vertices.begin(), sub.vertices.end());
    sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()), sub.vertices.end());
    for (long long v : sub.vertices)
        if (!q.has_vertex(v)) throw domain_error("unknown vertex " + std::to_string(v));
    for (auto& a : q.arrows)
        if (sub.has_vertex(a.tail) && sub.has_vertex(a.head)) sub.arrows.push_back(a);
    std::sort(sub.arrows.begin(), sub.arrows.end());
    return sub;
}

// ---------------------------------------------------------------------
// affine Dynkin shape detection

enum class AffineType { A, D, E6, E7, E8 };

struct AffineShape {
    AffineType type;
    int index; // k for A~k, m for D~m; 6/7/8 for E
};

inline std::string affine_name(const AffineShape& s) {
    switch (s.type) {
        case AffineType::A: return "Atilde" + std::to_string(s.index);
        case AffineType::D: return "Dtilde" + std::to_string(s.index);
        case AffineType::E6: return "Etilde6";
        case AffineType::E7: return "Etilde7";
        case AffineType::E8: return "Etilde8";
    }
    return "?";
}

inline AffineShape parse_affine_type(const std::string& text) {
    auto starts = [&](const char* p) { return text.rfind(p, 0) == 0; };
    if (starts("Atilde")) return {AffineType::A, std::stoi(text.substr(6))};
    if (starts("Dtilde")) return {AffineType::D, std::stoi(text.substr(6))};
    if (text == "Etilde6") return {AffineType::E6, 6};
    if (text == "Etilde7") return {AffineType::E7, 7};
    if (text == "Etilde8") return {AffineType::E8, 8};
    throw domain_error("unknown affine type '" + text + "'");
}

inline size_t affine_vertex_count(const AffineShape& s) {
    switch (s.type) {
        case AffineType::A: return (size_t)s.index + 1;
        case AffineType::D: return (size_t)s.index + 1;
        case AffineType::E6: return 7;
        case AffineType::E7: return 8;
        case AffineType::E8: return 9;
    }
    return 0;
}

struct SubquiverReport {
    bool graph_match = false;
    bool acyclic = false;
    bool relation_free = false;
    std::string detail; // witness text for whichever check failed first
    bool all() const { return graph_match && acyclic && relation_free; }
};

namespace detail {

// undirected multigraph degree/arm analysis against an affine diagram
inline bool graph_matches_affine(const Quiver& q, const AffineShape& shape, std::string& why) {
    size_t n = q.num_vertices();
    if (n != affine_vertex_count(shape)) {
        why = "vertex count " + std::to_string(n);
        return false;
    }
    std::map<long long, std::map<long long, int>> mult;
    size_t edge_count = q.arrows.size();
    for (auto& a : q.arrows) {
        if (a.tail == a.head) {
            why = "self-loop at " + std::to_string(a.tail);
            return false;
        }
        mult[a.tail][a.head]++;
        mult[a.head][a.tail]++;
    }
    std::map<long long, int> deg;
    for (long long v : q.vertices) deg[v] = 0;
    bool has_double = false;
    for (auto& [v, nb] : mult)
        for (auto& [w, m] : nb) {
            if (m > 2 || (m == 2 && !(shape.type == AffineType::A && shape.index == 1))) {
                why = "multi-edge " + std::to_string(v) + "-" + std::to_string(w);
                return false;
            }
            if (m == 2) has_double = true;
            deg[v] += m;
        }
    // connectivity
    if (n > 0) {
        std::set<long long> seen;
        std::vector<long long> stack = {q.vertices[0]};
        while (!stack.empty()) {
            long long v = stack.back();
            stack.pop_back();
            if (!seen.insert(v).second) continue;
            auto it = mult.find(v);
            if (it != mult.end())
                for (auto& [w, m] : it->second) stack.push_back(w);
        }
        if (seen.size() != n) {
            why = "not connected";
            return false;
        }
    }

    auto all_deg = [&](int d) {
        return std::all_of(q.vertices.begin(), q.vertices.end(),
                           [&](long long v) { return deg[v] == d; });
    };

    if (shape.type == AffineType::A) {
        if (shape.index == 1) {
            bool ok = n == 2 && edge_count == 2 && has_double;
            if (!ok) why = "not a double edge";
            return ok;
        }
        bool ok = edge_count == n && all_deg(2);
        if (!ok) why = "not a single cycle";
        return ok;
    }

    // remaining shapes are trees
    if (edge_count != n - 1 || has_double) {
        why = "not a tree";
        return false;
    }
    std::vector<long long> deg3, deg4plus, leaves;
    for (auto& [v, d] : deg) {
        if (d == 1) leaves.push_back(v);
        else if (d == 3) deg3.push_back(v);
        else if (d >= 4) deg4plus.push_back(v);
        else if (d != 2) {
            why = "isolated vertex";
            return false;
        }
    }

    if (shape.type == AffineType::D && shape.index == 4) {
        bool ok = deg4plus.size() == 1 && deg[deg4plus.empty() ? 0 : deg4plus[0]] == 4 &&
                  leaves.size() == 4 && deg3.empty();
        if (!ok) why = "not a 4-star";
        return ok;
    }
    if (!deg4plus.empty()) {
        why = "vertex of valency >= 4";
        return false;
    }

    auto arm_lengths = [&](long long center) {
        std::vector<int> arms;
        for (auto& [w, m] : mult[center]) {
            int len = 1;
            long long prev = center, cur = w;
            while (deg[cur] == 2) {
                long long nxt = -1;
                for (auto& [x, mm] : mult[cur])
                    if (x != prev) nxt = x;
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        return arms;
    };

    if (shape.type == AffineType::D) {
        if (deg3.size() != 2 || leaves.size() != 4) {
            why = "fork count";
            return false;
        }
        // the two forks joined by a path of m-4 edges, two leaves on each
        auto arms = arm_lengths(deg3[0]);
        std::vector<int> expect = {1, 1, shape.index - 4};
        std::sort(expect.begin(), expect.end());
        if (arms != expect) {
            why = "fork arms mismatch";
            return false;
        }
        return true;
    }

    if (deg3.size() != 1 || leaves.size() != 3) {
        why = "center count";
        return false;
    }
    auto arms = arm_lengths(deg3[0]);
    std::vector<int> expect;
    if (shape.type == AffineType::E6) expect = {2, 2, 2};
    if (shape.type == AffineType::E7) expect = {1, 3, 3};
    if (shape.type == AffineType::E8) expect = {1, 2, 5};
    if (arms != expect) {
        why = "arm lengths mismatch";
        return false;
    }
    return true;
}

inline bool quiver_acyclic(const Quiver& q, std::string& why) {
    std::map<long long, std::vector<long long>> out;
    for (auto& a : q.arrows) out[a.tail].push_back(a.head);
    std::map<long long, int> state; // 0 new, 1 active, 2 done
    std::vector<long long> cyc;
    std::function<bool(long long)> dfs = [&](long long v) {
        state[v] = 1;
        for (long long w : out[v]) {
            if (state[w] == 1) {
                cyc = {v, w};
                return false;
            }
            if (state[w] == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (long long v : q.vertices)
        if (state[v] == 0 && !dfs(v)) {
            why = "directed cycle through " + std::to_string(cyc[0]) + "->" + std::to_string(cyc[1]);
            return false;
        }
    return true;
}

// Parallel paths with equal weight multisets are identified by the
// commutation relations; relation-freeness of the subquiver is exactly
// the injectivity of (path -> weight multiset) on each vertex pair.
inline bool relation_free_check(const Quiver& q, std::string& why) {
    std::map<long long, std::vector<Arrow>> out;
    for (auto& a : q.arrows) out[a.tail].push_back(a);
    std::map<std::tuple<long long, long long, std::vector<int>>, int> count;
    std::vector<int> weights;
    std::function<void(long long, long long)> walk = [&](long long start, long long v) {
        for (auto& a : out[v]) {
            weights.push_back(a.weight);
            auto key = std::make_tuple(start, a.head, weights);
            std::sort(std::get<2>(key).begin(), std::get<2>(key).end());
            count[key]++;
            walk(start, a.head);
            weights.pop_back();
        }
    };
    for (long long v : q.vertices) walk(v, v);
    for (auto& [key, c] : count)
        if (c > 1) {
            why = std::to_string(c) + " parallel paths " + std::to_string(std::get<0>(key)) + "->" +
                  std::to_string(std::get<1>(key)) + " with equal weight multiset";
            return false;
        }
    return true;
}

} // namespace detail

inline SubquiverReport verify_affine_subquiver(const Quiver& sub, const AffineShape& shape) {
    SubquiverReport rep;
    std::string why;
    rep.graph_match = detail::graph_matches_affine(sub, shape, why);
    if (!rep.graph_match) rep.detail = "graph: " + why;
    why.clear();
    rep.acyclic = detail::quiver_acyclic(sub, why);
    if (!rep.acyclic && rep.detail.empty()) rep.detail = why;
    if (rep.acyclic) {
        why.clear();
        rep.relation_free = detail::relation_free_check(sub, why);
        if (!rep.relation_free && rep.detail.empty()) rep.detail = why;
    } else {
        rep.relation_free = false;
    }
    return rep;
}

// ---------------------------------------------------------------------
// vertex sets of the affine subquivers carried by the 1/r(1,k,s) family

struct DTildeChoice {
    long long n = 0;     // D~(n+1) on n+2 vertices
    long long alpha = 0; // 0 = pick the least admissible
};

inline std::vector<long long> theorem_vertices(const FamilyParams& fp, const AffineShape& shape,
                                               const DTildeChoice& dchoice = {}) {
    long long k = fp.k;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw domain_error("hypothesis violated: " + what);
    };
    std::vector<long long> vs;
    switch (shape.type) {
        case AffineType::A: {
            require(shape.index == k, "A-type index must equal k");
            for (long long v = 1; v <= k + 1; ++v) vs.push_back(v);
            break;
        }
        case AffineType::E6: {
            require(k > 8, "E6 needs k > 8");
            vs = {k + 6, 2 * k + 6, 3 * k + 4, 3 * k + 5, 3 * k + 6, 4 * k + 7, 5 * k + 8};
            break;
        }
        case AffineType::E7: {
            require(k > 9, "E7 needs k > 9");
            vs = {k + 6, 2 * k + 3, 2 * k + 4, 2 * k + 5, 2 * k + 6, 3 * k + 7, 4 * k + 8, 5 * k + 9};
            break;
        }
        case AffineType::E8: {
            require(k > 10, "E8 needs k > 10");
            vs = {k + 5,     2 * k + 3, 2 * k + 4, 2 * k + 5, 3 * k + 6,
                  4 * k + 7, 5 * k + 8, 6 * k + 9, 7 * k + 10};
            break;
        }
        case AffineType::D: {
            long long n = dchoice.n != 0 ? dchoice.n : shape.index - 1;
            require(k >= 5 && k % 2 == 1, "D-type needs odd k >= 5");
            long long qq = (k - 1) / 2;
            require(5 <= n && n <= k + 1, "D-type needs 5 <= n <= k+1");
            long long alpha = dchoice.alpha;
            if (alpha == 0) {
                // least positive solution of alpha = q (mod k), alpha = -2 (mod k+1)
                long long mod = k * (k + 1);
                for (long long a = 1; a <= mod; ++a)
                    if (a % k == qq && a % (k + 1) == (k + 1) - 2) { alpha = a; break; }
            }
            require(alpha % k == qq, "alpha = q (mod k)");
            require(alpha % (k + 1) == k - 1, "alpha = -2 (mod k+1)");
            require(alpha <= fp.s - k * k + 3 * k - 1, "alpha <= s - k^2 + 3k - 1");
            vs = {alpha - k - 1, alpha, alpha + 1};
            for (long long i = 1; i <= n - 3; ++i) vs.push_back(alpha + i * k);
            vs.push_back(alpha + k * (n - 3) - 1);
            vs.push_back(alpha + k * (n - 3) + k + 1);
            break;
        }
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (long long v : vs)
        if (v < 0 || v >= fp.r) throw domain_error("vertex " + std::to_string(v) + " outside 0..r-1");
    return vs;
}

// Least admissible alpha for the D-type vertex set, exposed for reporting.
inline long long dtilde_least_alpha(const FamilyParams& fp) {
    long long k = fp.k;
    if (k < 5 || k % 2 == 0) throw domain_error("D-type needs odd k >= 5");
    long long qq = (k - 1) / 2;
    for (long long a = 1; a <= k * (k + 1); ++a)
        if (a % k == qq && a % (k + 1) == (k + 1) - 2) return a;
    throw internal_error("no CRT solution for alpha");
}

// ---------------------------------------------------------------------
// search

inline constexpr long long kSubquiverSearchCap = 60;

// All vertex sets (up to `limit`) inducing a subquiver whose verification
// report is all-true.  D~4 candidates are exactly stars around a vertex
// with >= 4 distinct neighbours, which keeps that search complete and fast.
inline std::vector<std::vector<long long>> find_subquivers(const Quiver& q, const AffineShape& shape,
                                                           size_t limit = SIZE_MAX) {
    if ((long long)q.num_vertices() > kSubquiverSearchCap)
        throw cap_exceeded("find_subquivers: quiver above search cap");
    std::vector<std::vector<long long>> found;
    size_t target = affine_vertex_count(shape);

    std::map<long long, std::set<long long>> nbr;
    for (auto& a : q.arrows)
        if (a.tail != a.head) {
            nbr[a.tail].insert(a.head);
            nbr[a.head].insert(a.tail);
        }

    auto check = [&](std::vector<long long> vs) {
        std::sort(vs.begin(), vs.end());
        auto sub = extract_subquiver(q, vs);
        if (verify_affine_subquiver(sub, shape).all()) found.push_back(vs);
    };

    if (shape.type == AffineType::D && shape.index == 4) {
        for (long long c : q.vertices) {
            auto& nb = nbr[c];
            if (nb.size() < 4) continue;
            std::vector<long long> cand(nb.begin(), nb.end());
            std::vector<int> pick(cand.size(), 0);
            std::fill(pick.end() - 4, pick.end(), 1);
            do {
                std::vector<long long> vs = {c};
                for (size_t i = 0; i < cand.size(); ++i)
                    if (pick[i]) vs.push_back(cand[i]);
                check(vs);
                if (found.size() >= limit) return found;
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
        return found;
    }

    // connected induced subgraph enumeration with a minimum-root canon
    long long budget = 4'000'000;
    std::set<std::vector<long long>> seen;
    std::function<void(std::vector<long long>&, std::set<long long>&, long long)> grow =
        [&](std::vector<long long>& cur, std::set<long long>& frontier, long long root) {
            if (--budget < 0) throw cap_exceeded("find_subquivers: search budget exhausted");
            if (found.size() >= limit) return;
            if (cur.size() == target) {
                std::vector<long long> vs = cur;
                std::sort(vs.begin(), vs.end());
                if (seen.insert(vs).second) check(vs);
                return;
            }
            for (long long v : std::vector<long long>(frontier.begin(), frontier.end())) {
                if (v <= root) continue;
                if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
                cur.push_back(v);
                std::set<long long> nf = frontier;
                for (long long w : nbr[v]) nf.insert(w);
                grow(cur, nf, root);
                cur.pop_back();
                frontier.erase(v); // canonical: never revisit v at this level
                if (found.size() >= limit) return;
            }
        };
    for (long long root : q.vertices) {
        std::vector<long long> cur = {root};
        std::set<long long> frontier(nbr[root].begin(), nbr[root].end());
        std::set<long long> saved = frontier;
        grow(cur, frontier, root);
        if (found.size() >= limit) break;
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

// Oriented 3-cycle inside {v} + two of its neighbours; exists whenever two
// distinct weights meet at v, which is what rules out D~4 subquivers.
inline std::optional<std::array<long long, 3>> d4_witness(const Quiver& q, long long v) {
    if (q.r <= 1) return std::nullopt;
    std::set<long long> weights;
    // weights are recoverable from arrows at v
    std::vector<long long> outw, inw;
    for (auto& a : q.arrows) {
        if (a.tail == v) outw.push_back((a.head - a.tail + q.r) % q.r);
        if (a.head == v) inw.push_back((a.head - a.tail + q.r) % q.r);
    }
    for (long long a : inw)
        for (long long b : outw) {
            if (a == b) continue;
            long long x = (v - a + q.r) % q.r; // x -> v
            long long y = (v + b) % q.r;       // v -> y
            if (x == y || x == v || y == v) continue;
            // closing arrow y -> x has weight -(a+b) mod r, one of the three
            long long need = ((x - y) % q.r + q.r) % q.r;
            for (auto& arr : q.arrows)
                if (arr.tail == y && arr.head == x &&
                    ((arr.head - arr.tail + q.r) % q.r) == need)
                    return std::array<long long, 3>{v, y, x};
        }
    return std::nullopt;
}

inline size_t distinct_neighbour_count(const Quiver& q, long long v) {
    std::set<long long> nb;
    for (auto& a : q.arrows) {
        if (a.tail == v && a.head != v) nb.insert(a.head);
        if (a.head == v && a.tail != v) nb.insert(a.tail);
    }
    return nb.size();
}

} // namespace mckay
