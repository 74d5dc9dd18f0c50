#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

// 2D quotient datum seen from one corner of the junior simplex, reduced
// to the normal form 1/r'(1,a'), plus its Hirzebruch-Jung sequence.
struct CornerData {
    long long r2 = 1;
    long long a2 = 0;
    HJSequence hj; // empty when the corner is already smooth
};

enum class EdgeKind { Boundary, Fan, Extension, Tessellation };

struct CornerFanLog {
    std::string corner;
    CornerData data;
    bool flipped = false;
    std::vector<std::pair<std::string, long long>> segments; // (target, label)
    std::string edge_prev, edge_next; // endpoints of the unlabeled boundary parts
};

struct LineLog {
    std::string name;   // "<corner>-><first target>"
    std::string corner;
    std::vector<std::string> trace;   // drawn lattice points after the corner
    std::vector<long long> labels;    // label carried by each drawn segment
    std::string outcome;              // boundary | defeated | tie
};

struct EventLog {
    std::string at;
    std::vector<std::pair<std::string, long long>> participants;
    std::string winner; // empty on tie
    long long new_label = 0;
    bool tie = false;
    bool low_label = false; // winner continued with label <= 1
};

struct TessLog {
    std::array<std::string, 3> corners;
    long long side = 0;
    std::vector<std::pair<std::string, std::string>> added_edges;
    std::vector<std::string> added_vertices;
};

struct StepLog {
    std::vector<CornerFanLog> step1;
    std::vector<LineLog> lines;
    std::vector<EventLog> events;
    std::vector<TessLog> step3;
};

struct Triangulation {
    GroupSpec group;
    std::vector<JuniorPoint> vertices; // sorted by id
    std::map<std::pair<std::string, std::string>, EdgeKind> edges;
    std::set<std::array<std::string, 3>> triangles;
    StepLog log;

    const JuniorPoint& vertex(const std::string& id) const {
        for (auto& v : vertices)
            if (v.id == id) return v;
        throw domain_error("unknown vertex id " + id);
    }
    bool has_edge(const std::string& a, const std::string& b) const {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        return edges.count(key) != 0;
    }
};

inline bool is_basic(const GroupSpec& g, const Vec3& a, const Vec3& b, const Vec3& c) {
    long long d = det3(a, b, c);
    return (d < 0 ? -d : d) == g.r * g.r;
}

namespace detail {

inline long long mod_r(long long x, long long r) {
    long long m = x % r;
    return m < 0 ? m + r : m;
}

inline long long inverse_mod(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = mod_r(a, m);
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t, nt); nt -= q * t;
        std::swap(r, nr); nr -= q * r;
    }
    if (r != 1) throw internal_error("inverse_mod: not invertible");
    return mod_r(t, m);
}

// Normal form of the 2D quotient with transverse weights (alpha, beta):
// the lattice Z^2 + Z*(alpha,beta)/r, cone the positive quadrant, gives a
// cyclic quotient of some order m presented as 1/m(1, a').
inline std::pair<long long, long long> normalize_2d(long long r, long long alpha, long long beta) {
    if (r == 1) return {1, 0};
    long long g = std::gcd(std::gcd(alpha, beta), r);
    long long d1 = std::gcd(r, alpha * (r / std::gcd(beta, r)));
    long long d2 = std::gcd(r, beta * (r / std::gcd(alpha, r)));
    if ((d1 * d2) % (r * g) != 0) throw internal_error("normalize_2d: non-integral index");
    long long m = d1 * d2 / (r * g);
    if (m == 1) return {1, 0};
    if ((m * alpha) % d1 != 0 || (m * beta) % d2 != 0)
        throw internal_error("normalize_2d: generator not in scaled lattice");
    long long c1 = mod_r(m * alpha / d1, m);
    long long c2 = mod_r(m * beta / d2, m);
    if (std::gcd(c1, m) != 1 || std::gcd(c2, m) != 1)
        throw internal_error("normalize_2d: quasi-reflection survived reduction");
    long long a2 = mod_r(c2 * inverse_mod(c1, m), m);
    return {m, a2};
}

// Residue table of the embedded cyclic group: reduced numerator -> exponent.
struct LatticeIndex {
    long long r;
    std::map<Vec3, long long> exponent_of;

    explicit LatticeIndex(const GroupSpec& g) : r(g.r) {
        for (long long j = 0; j < g.r; ++j)
            exponent_of[{mod_r(j * g.weights[0], r), mod_r(j * g.weights[1], r),
                         mod_r(j * g.weights[2], r)}] = j;
    }
    bool contains(const Vec3& v) const {
        return exponent_of.count({mod_r(v[0], r), mod_r(v[1], r), mod_r(v[2], r)}) != 0;
    }
    long long exponent(const Vec3& v) const {
        auto it = exponent_of.find({mod_r(v[0], r), mod_r(v[1], r), mod_r(v[2], r)});
        if (it == exponent_of.end()) throw internal_error("point not in lattice: " + vec_str(v));
        return it->second;
    }
};

inline Vec3 primitive_lattice_step(const LatticeIndex& idx, const Vec3& dir) {
    long long g = gcd3(dir[0], dir[1], dir[2]);
    if (g == 0) throw internal_error("zero direction");
    for (long long d = g; d >= 1; --d) {
        if (g % d != 0) continue;
        Vec3 cand = {dir[0] / d, dir[1] / d, dir[2] / d};
        if (idx.contains(cand)) return cand;
    }
    throw internal_error("no lattice step along " + vec_str(dir));
}

} // namespace detail

// The 2D datum at a corner: transverse weights taken in cyclic order
// (next axis, previous axis), reduced to 1/r'(1,a').
inline CornerData corner_data(const GroupSpec& g, int corner_axis) {
    if (g.r <= 1) throw domain_error("corner_data needs r > 1");
    if (corner_axis < 0 || corner_axis > 2) throw domain_error("corner axis out of range");
    int na = (corner_axis + 1) % 3, pa = (corner_axis + 2) % 3;
    auto [m, a2] = detail::normalize_2d(g.r, g.weights[na], g.weights[pa]);
    CornerData cd;
    cd.r2 = m;
    cd.a2 = a2;
    if (m > 1) cd.hj = hj_expand(m, a2);
    return cd;
}

inline CornerData corner_data(const GroupSpec& g, const std::string& corner_id) {
    int axis = corner_id == "ex" ? 0 : corner_id == "ey" ? 1 : corner_id == "ez" ? 2 : -1;
    if (axis < 0) throw domain_error("unknown corner " + corner_id);
    return corner_data(g, axis);
}

namespace detail {

struct TournamentLine {
    int corner_axis;
    std::string corner_id;
    std::string name;
    Vec3 origin;
    Vec3 step;
    std::vector<Vec3> pts;  // lattice points after the corner, in order
    bool exits_on_lattice = false;
    long long label = 0;
    std::vector<long long> labels;
    int frontier = 0;
    bool done = false;
    int last_drawn = -1; // index into pts of the final drawn point
    std::string outcome;
};

// 2D affine chart of the simplex plane: (x, y) = (numerator[1], numerator[0]).
inline std::pair<long long, long long> plane2d(const Vec3& n) { return {n[1], n[0]}; }

inline __int128 cross2(std::pair<long long, long long> o, std::pair<long long, long long> a,
                       std::pair<long long, long long> b) {
    return (__int128)(a.first - o.first) * (b.second - o.second) -
           (__int128)(a.second - o.second) * (b.first - o.first);
}

struct PlanarGraph {
    std::vector<std::pair<long long, long long>> pos; // per vertex
    std::vector<std::vector<int>> adj;                // sorted CCW lazily

    void sort_ccw(int v) {
        auto& out = adj[v];
        auto p0 = pos[v];
        auto half = [&](int u) {
            auto d = std::make_pair(pos[u].first - p0.first, pos[u].second - p0.second);
            return (d.second > 0 || (d.second == 0 && d.first > 0)) ? 0 : 1;
        };
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            auto da = std::make_pair(pos[a].first - p0.first, pos[a].second - p0.second);
            auto db = std::make_pair(pos[b].first - p0.first, pos[b].second - p0.second);
            __int128 cr = (__int128)da.first * db.second - (__int128)da.second * db.first;
            if (cr != 0) return cr > 0;
            return a < b;
        });
    }
};

} // namespace detail

// Step 1 + Step 2 + Step 3 of the G-Hilb triangulation algorithm.
inline Triangulation build_triangulation(const GroupSpec& g) {
    validate_group(g);
    Triangulation T;
    T.group = g;

    auto corners = simplex_corners(g);
    auto juniors = junior_points(g);
    detail::LatticeIndex lattice(g);

    std::map<Vec3, std::string> id_of_point;
    for (auto& c : corners) id_of_point[c.numerator] = c.id;
    for (auto& e : juniors) id_of_point[e.numerator] = e.id;
    auto point_id = [&](const Vec3& p) -> std::string {
        auto it = id_of_point.find(p);
        if (it == id_of_point.end()) throw internal_error("unnamed lattice point " + vec_str(p));
        return it->second;
    };

    std::map<std::pair<std::string, std::string>, EdgeKind> edges;
    auto add_edge = [&](const std::string& a, const std::string& b, EdgeKind k) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        edges.emplace(key, k); // first writer wins
    };

    // ---- boundary chains, split at every lattice point of each simplex edge
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3;
        int c = 3 - a - b;
        long long gc = std::gcd(g.weights[c], g.r);
        long long delta = g.r > 1 ? std::gcd(g.r, (g.r / gc) * g.weights[b]) : g.r;
        std::string prev = corners[a].id;
        for (long long m = delta; m <= g.r; m += delta) {
            Vec3 p = {0, 0, 0};
            p[a] = g.r - m;
            p[b] = m;
            std::string cur = point_id(p);
            add_edge(prev, cur, EdgeKind::Boundary);
            prev = cur;
        }
    }

    if (g.r == 1) {
        T.vertices = {corners[0], corners[1], corners[2]};
        std::sort(T.vertices.begin(), T.vertices.end(),
                  [](auto& x, auto& y) { return x.id < y.id; });
        T.edges = edges;
        T.triangles.insert({"ex", "ey", "ez"});
        return T;
    }

    // ---- Step 1: corner fans via the continued-fraction recursion
    std::vector<detail::TournamentLine> lines;
    auto nearest_on_edge = [&](int a, int b) -> Vec3 {
        int c = 3 - a - b;
        long long gc = std::gcd(g.weights[c], g.r);
        long long delta = std::gcd(g.r, (g.r / gc) * g.weights[b]);
        Vec3 p = {0, 0, 0};
        p[a] = g.r - delta;
        p[b] = delta;
        return p;
    };

    for (int axis = 0; axis < 3; ++axis) {
        int na = (axis + 1) % 3, pa = (axis + 2) % 3;
        const Vec3 origin = corners[axis].numerator;
        Vec3 v_prev = nearest_on_edge(axis, pa) - origin;
        Vec3 v_next = nearest_on_edge(axis, na) - origin;

        CornerFanLog fan;
        fan.corner = corners[axis].id;
        fan.edge_prev = point_id(origin + v_prev);
        fan.edge_next = point_id(origin + v_next);
        fan.data = corner_data(g, axis);

        long long m = fan.data.r2, a2 = fan.data.a2;
        HJSequence hj = fan.data.hj;
        Vec3 L0 = v_prev, Lend = v_next;

        auto chain_ok = [&](const Vec3& l0, const Vec3& l1, const HJSequence& ks,
                            const Vec3& lend, std::vector<Vec3>& out) {
            out.clear();
            Vec3 prev = l0, cur = l1;
            for (size_t i = 0; i < ks.size(); ++i) {
                Vec3 p = origin + cur;
                if (p[0] < 0 || p[1] < 0 || p[2] < 0) return false;
                if (!lattice.contains(p)) return false;
                out.push_back(cur);
                Vec3 nxt = ks[i] * cur - prev;
                prev = cur;
                cur = nxt;
            }
            return cur == lend;
        };

        std::vector<Vec3> Ls;
        if (m > 1) {
            Vec3 sum = Lend + a2 * L0;
            bool ok = sum[0] % m == 0 && sum[1] % m == 0 && sum[2] % m == 0;
            Vec3 L1{};
            if (ok) {
                L1 = {sum[0] / m, sum[1] / m, sum[2] / m};
                ok = chain_ok(L0, L1, hj, Lend, Ls);
            }
            if (!ok) {
                // reversed orientation: same order m, reciprocal type
                auto [m2, a2rev] = detail::normalize_2d(g.r, g.weights[pa], g.weights[na]);
                if (m2 != m) throw internal_error("corner order mismatch between orientations");
                HJSequence hjrev = m > 1 ? hj_expand(m, a2rev) : HJSequence{};
                Vec3 sum2 = L0 + a2rev * Lend;
                if (sum2[0] % m || sum2[1] % m || sum2[2] % m)
                    throw internal_error("corner fan of " + fan.corner + " has no lattice solution");
                Vec3 L1r = {sum2[0] / m, sum2[1] / m, sum2[2] / m};
                if (!chain_ok(Lend, L1r, hjrev, L0, Ls))
                    throw internal_error("corner fan of " + fan.corner + " fails the recursion");
                fan.flipped = true;
                hj = hjrev;
            }
        }

        for (size_t i = 0; i < Ls.size(); ++i) {
            detail::TournamentLine ln;
            ln.corner_axis = axis;
            ln.corner_id = corners[axis].id;
            ln.origin = origin;
            ln.label = hj[i];
            Vec3 first = origin + Ls[i];
            ln.name = ln.corner_id + "->" + point_id(first);
            ln.step = detail::primitive_lattice_step(lattice, Ls[i]);
            if (!(ln.step == Ls[i]))
                throw internal_error("step-1 segment " + ln.name + " skips a lattice point");
            // trajectory: lattice points along the ray until the boundary
            Vec3 p = first;
            while (true) {
                ln.pts.push_back(p);
                bool on_boundary = p[0] == 0 || p[1] == 0 || p[2] == 0;
                if (on_boundary) {
                    ln.exits_on_lattice = true;
                    break;
                }
                Vec3 q = p + ln.step;
                if (q[0] < 0 || q[1] < 0 || q[2] < 0) {
                    ln.exits_on_lattice = false;
                    break;
                }
                p = q;
            }
            ln.labels.push_back(ln.label);
            fan.segments.emplace_back(point_id(first), hj[i]);
            lines.push_back(std::move(ln));
        }
        T.log.step1.push_back(std::move(fan));
    }

    // ---- Step 2: the extension tournament.  Every lattice point shared by
    // live lines hosts one fight: the strictly greatest label survives and
    // drops by the number of rivals it defeats; equal greatest labels all
    // terminate.  Participation is circular (a line's label at a point
    // depends on rivals whose fate depends on fights further along the
    // first line), so the tournament is computed as a fixed point: start
    // from every line running its whole trajectory and repeatedly recompute
    // each line's first losing point until the assignment is stable.
    const int kNeverLost = 1 << 20;
    size_t nlines = lines.size();
    std::vector<int> death(nlines, kNeverLost); // index of the losing point, or never
    std::vector<int> interior(nlines);
    for (size_t li = 0; li < nlines; ++li)
        interior[li] = (int)lines[li].pts.size() - (lines[li].exits_on_lattice ? 1 : 0);
    std::map<Vec3, std::vector<std::pair<int, int>>> meet; // point -> (line, idx)
    for (size_t li = 0; li < nlines; ++li)
        for (int i = 0; i < interior[li]; ++i) meet[lines[li].pts[i]].push_back({(int)li, i});

    auto participants_at = [&](const Vec3& pt) {
        std::vector<std::pair<int, int>> out;
        for (auto& [li, idx] : meet.at(pt))
            if (idx <= death[li]) out.push_back({li, idx});
        return out;
    };
    // the label a line carries at each of its own points, assuming it ran
    // that far, with drops counted from the rivals present under `death`
    auto labels_hypothetical = [&]() {
        std::vector<std::vector<long long>> lab(nlines);
        for (size_t li = 0; li < nlines; ++li) {
            long long cur = lines[li].label;
            lab[li].push_back(cur);
            for (int i = 0; i + 1 < (int)lines[li].pts.size(); ++i) {
                if (i < interior[li]) {
                    size_t rivals = 0;
                    for (auto& [mj, midx] : meet.at(lines[li].pts[i]))
                        if (mj != (int)li && midx <= death[mj]) ++rivals;
                    cur -= (long long)rivals;
                }
                lab[li].push_back(cur);
            }
        }
        return lab;
    };
    // first point where the line fails to be the unique strict maximum
    auto first_loss = [&](const std::vector<std::vector<long long>>& lab, size_t li) {
        for (int i = 0; i < interior[li]; ++i) {
            bool strict_max = true;
            bool any_rival = false;
            for (auto& [mj, midx] : meet.at(lines[li].pts[i])) {
                if (mj == (int)li || midx > death[mj]) continue;
                any_rival = true;
                if (lab[mj][midx] >= lab[li][i]) strict_max = false;
            }
            if (any_rival && !strict_max) return i;
        }
        return kNeverLost;
    };
    auto consistent = [&]() {
        auto lab = labels_hypothetical();
        for (size_t li = 0; li < nlines; ++li) {
            int want = std::min(first_loss(lab, li), kNeverLost);
            int have = death[li] >= interior[li] ? kNeverLost : death[li];
            if (want != have) return false;
            if (have == kNeverLost && !lines[li].exits_on_lattice) return false;
        }
        return true;
    };

    bool stable = false;
    for (int iter = 0; iter < 200 && !stable; ++iter) {
        auto lab = labels_hypothetical();
        std::vector<int> next_death(nlines);
        for (size_t li = 0; li < nlines; ++li) next_death[li] = first_loss(lab, li);
        stable = next_death == death;
        death = next_death;
    }
    if (stable && !consistent()) stable = false;

    if (!stable) {
        // circular fight dependencies: fall back to a complete search over
        // death assignments (each line can only die at a shared point, or
        // run to the boundary), accepting the unique consistent one
        std::vector<std::vector<int>> candidates(nlines);
        unsigned long long space = 1;
        for (size_t li = 0; li < nlines; ++li) {
            for (int i = 0; i < interior[li]; ++i)
                if (meet.at(lines[li].pts[i]).size() >= 2) candidates[li].push_back(i);
            if (lines[li].exits_on_lattice || candidates[li].empty())
                candidates[li].push_back(kNeverLost);
            space *= candidates[li].size();
            if (space > 4'000'000ull)
                throw internal_error("step-2 tournament search space too large");
        }
        std::vector<std::vector<int>> solutions;
        std::vector<size_t> pick(nlines, 0);
        while (true) {
            for (size_t li = 0; li < nlines; ++li) death[li] = candidates[li][pick[li]];
            if (consistent()) {
                solutions.push_back(death);
                if (solutions.size() > 1) break;
            }
            size_t v = 0;
            while (v < nlines && ++pick[v] == candidates[v].size()) {
                pick[v] = 0;
                ++v;
            }
            if (v == nlines) break;
        }
        if (solutions.size() != 1)
            throw internal_error("step-2 tournament has " + std::to_string(solutions.size()) +
                                 " consistent outcomes (expected exactly one)");
        death = solutions[0];
    }
    auto lab = labels_hypothetical();

    // finalize lines: traces, outcomes, fight log
    for (size_t li = 0; li < nlines; ++li) {
        auto& ln = lines[li];
        if (death[li] == kNeverLost) {
            if (!ln.exits_on_lattice)
                throw internal_error("line " + ln.name +
                                     " exits the simplex between lattice points");
            ln.last_drawn = (int)ln.pts.size() - 1;
            ln.outcome = "boundary";
        } else {
            ln.last_drawn = death[li];
        }
        ln.labels.assign(lab[li].begin(), lab[li].begin() + ln.last_drawn + 1);
    }
    for (auto& [pt, arrivals] : meet) {
        auto present = participants_at(pt);
        if (present.size() < 2) continue;
        EventLog ev;
        ev.at = point_id(pt);
        long long best = -1;
        int best_count = 0, winner = -1;
        for (auto& [li, idx] : present) {
            long long l = lab[li][idx];
            ev.participants.emplace_back(lines[li].name, l);
            if (l > best) { best = l; best_count = 1; winner = li; }
            else if (l == best) { best_count++; }
        }
        std::sort(ev.participants.begin(), ev.participants.end());
        if (best_count > 1) {
            ev.tie = true;
            for (auto& [li, idx] : present) {
                if (death[li] != idx)
                    throw internal_error("tied line survives fight at " + ev.at);
                if (lines[li].outcome.empty()) lines[li].outcome = "tie";
            }
        } else {
            ev.winner = lines[winner].name;
            ev.new_label = best - (long long)(present.size() - 1);
            ev.low_label = ev.new_label <= 1;
            for (auto& [li, idx] : present) {
                if (li == winner) {
                    if (death[li] == idx)
                        throw internal_error("fight winner dies at " + ev.at);
                } else {
                    if (death[li] != idx)
                        throw internal_error("defeated line survives fight at " + ev.at);
                    if (lines[li].outcome.empty()) lines[li].outcome = "defeated";
                }
            }
        }
        T.log.events.push_back(std::move(ev));
    }
    std::sort(T.log.events.begin(), T.log.events.end(),
              [](const EventLog& a, const EventLog& b) { return a.at < b.at; });

    for (auto& ln : lines) {
        if (ln.outcome.empty()) ln.outcome = "boundary";
        LineLog ll;
        ll.name = ln.name;
        ll.corner = ln.corner_id;
        ll.outcome = ln.outcome;
        ll.labels = ln.labels;
        std::string prev = ln.corner_id;
        for (int i = 0; i <= ln.last_drawn; ++i) {
            std::string cur = point_id(ln.pts[i]);
            ll.trace.push_back(cur);
            add_edge(prev, cur, i == 0 ? EdgeKind::Fan : EdgeKind::Extension);
            prev = cur;
        }
        T.log.lines.push_back(std::move(ll));
    }
    std::sort(T.log.lines.begin(), T.log.lines.end(),
              [](const LineLog& a, const LineLog& b) { return a.name < b.name; });

    // ---- face extraction over the step-1/2 arrangement
    std::vector<std::string> vid;
    std::map<std::string, int> vindex;
    for (auto& [e, k] : edges) {
        for (const std::string& v : {e.first, e.second})
            if (!vindex.count(v)) { vindex[v] = (int)vid.size(); vid.push_back(v); }
    }
    std::map<std::string, Vec3> num_of;
    for (auto& c : corners) num_of[c.id] = c.numerator;
    for (auto& e : juniors) num_of[e.id] = e.numerator;

    detail::PlanarGraph pg;
    pg.pos.resize(vid.size());
    pg.adj.resize(vid.size());
    for (size_t i = 0; i < vid.size(); ++i) pg.pos[i] = detail::plane2d(num_of[vid[i]]);
    for (auto& [e, k] : edges) {
        int u = vindex[e.first], v = vindex[e.second];
        pg.adj[u].push_back(v);
        pg.adj[v].push_back(u);
    }
    for (size_t v = 0; v < vid.size(); ++v) pg.sort_ccw((int)v);

    // face walk: next half-edge = clockwise predecessor of the twin
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> faces;
    for (size_t u0 = 0; u0 < vid.size(); ++u0) {
        for (int v0 : pg.adj[u0]) {
            if (used.count({(int)u0, v0})) continue;
            std::vector<int> cycle;
            int u = (int)u0, v = v0;
            while (!used.count({u, v})) {
                used.insert({u, v});
                cycle.push_back(u);
                auto& out = pg.adj[v];
                int idx = -1;
                for (size_t i = 0; i < out.size(); ++i)
                    if (out[i] == u) { idx = (int)i; break; }
                if (idx < 0) throw internal_error("half-edge twin missing");
                int nidx = (idx + (int)out.size() - 1) % (int)out.size();
                u = v;
                v = out[nidx];
            }
            faces.push_back(std::move(cycle));
        }
    }

    // classify faces by signed area; the outer face is the unique negative one
    auto face_area2 = [&](const std::vector<int>& cyc) {
        __int128 a = 0;
        for (size_t i = 0; i < cyc.size(); ++i) {
            auto p = pg.pos[cyc[i]], q = pg.pos[cyc[(i + 1) % cyc.size()]];
            a += (__int128)p.first * q.second - (__int128)p.second * q.first;
        }
        return a;
    };

    // ---- Step 3: tessellate regular faces, collect basic triangles
    for (auto& cyc : faces) {
        if (face_area2(cyc) <= 0) continue; // outer face
        // polygon corners: direction changes along the cycle
        size_t n = cyc.size();
        std::vector<size_t> corner_pos;
        for (size_t i = 0; i < n; ++i) {
            auto a = pg.pos[cyc[(i + n - 1) % n]], b = pg.pos[cyc[i]], c = pg.pos[cyc[(i + 1) % n]];
            if (detail::cross2(a, b, c) != 0) corner_pos.push_back(i);
        }
        if (corner_pos.size() != 3)
            throw internal_error("step-2 face with " + std::to_string(corner_pos.size()) +
                                 " corners (expected 3)");
        long long m01 = (long long)((corner_pos[1] - corner_pos[0] + n) % n);
        long long m12 = (long long)((corner_pos[2] - corner_pos[1] + n) % n);
        long long m20 = (long long)((corner_pos[0] + n - corner_pos[2]) % n);
        std::string A = vid[cyc[corner_pos[0]]], B = vid[cyc[corner_pos[1]]], C = vid[cyc[corner_pos[2]]];
        if (m01 != m12 || m12 != m20)
            throw internal_error("face " + A + "," + B + "," + C + " has unequal side lengths");
        long long m = m01;
        Vec3 pa = num_of[A], pb = num_of[B], pc = num_of[C];
        long long d = det3(pa, pb, pc);
        if ((d < 0 ? -d : d) != m * m * g.r * g.r)
            throw internal_error("face " + A + "," + B + "," + C + " is not unimodularly regular");
        if (m == 1) {
            std::array<std::string, 3> tri = {A, B, C};
            std::sort(tri.begin(), tri.end());
            T.triangles.insert(tri);
            continue;
        }
        // regular triangle of side m: tessellate into m^2 basic triangles
        TessLog tl;
        tl.side = m;
        tl.corners = {A, B, C};
        std::sort(tl.corners.begin(), tl.corners.end());
        Vec3 u = {(pb[0] - pa[0]) / m, (pb[1] - pa[1]) / m, (pb[2] - pa[2]) / m};
        Vec3 w = {(pc[0] - pa[0]) / m, (pc[1] - pa[1]) / m, (pc[2] - pa[2]) / m};
        auto grid_id = [&](long long i, long long j) {
            Vec3 p = pa + i * u + j * w;
            auto it = id_of_point.find(p);
            if (it == id_of_point.end())
                throw internal_error("tessellation point " + vec_str(p) + " is not a lattice point");
            return it->second;
        };
        for (long long i = 0; i <= m; ++i)
            for (long long j = 0; i + j <= m; ++j) {
                std::string id = grid_id(i, j);
                if (0 < i && 0 < j && i + j < m) tl.added_vertices.push_back(id);
            }
        auto add_tess_edge = [&](const std::string& x, const std::string& y) {
            auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
            if (!edges.count(key)) {
                edges.emplace(key, EdgeKind::Tessellation);
                tl.added_edges.push_back(key);
            }
        };
        for (long long i = 0; i <= m; ++i)
            for (long long j = 0; i + j <= m; ++j) {
                if (i + j < m) {
                    add_tess_edge(grid_id(i, j), grid_id(i + 1, j));
                    add_tess_edge(grid_id(i, j), grid_id(i, j + 1));
                    add_tess_edge(grid_id(i + 1, j), grid_id(i, j + 1));
                }
            }
        for (long long i = 0; i + 1 <= m; ++i)
            for (long long j = 0; i + j + 1 <= m; ++j) {
                std::array<std::string, 3> up = {grid_id(i, j), grid_id(i + 1, j), grid_id(i, j + 1)};
                std::sort(up.begin(), up.end());
                T.triangles.insert(up);
                if (i + j + 2 <= m) {
                    std::array<std::string, 3> dn = {grid_id(i + 1, j), grid_id(i + 1, j + 1),
                                                     grid_id(i, j + 1)};
                    std::sort(dn.begin(), dn.end());
                    T.triangles.insert(dn);
                }
            }
        std::sort(tl.added_edges.begin(), tl.added_edges.end());
        std::sort(tl.added_vertices.begin(), tl.added_vertices.end());
        T.log.step3.push_back(std::move(tl));
    }
    std::sort(T.log.step3.begin(), T.log.step3.end(),
              [](const TessLog& a, const TessLog& b) { return a.corners < b.corners; });

    // ---- assemble
    T.edges = edges;
    T.vertices.assign(corners.begin(), corners.end());
    T.vertices.insert(T.vertices.end(), juniors.begin(), juniors.end());
    std::sort(T.vertices.begin(), T.vertices.end(),
              [](const JuniorPoint& x, const JuniorPoint& y) { return x.id < y.id; });
    if ((long long)T.triangles.size() != g.r)
        throw internal_error("triangle count " + std::to_string(T.triangles.size()) +
                             " != group order " + std::to_string(g.r));
    return T;
}

// Aggregated structural checks; an empty report means the triangulation
// is a genuine basic triangulation of the junior simplex.
inline std::vector<std::string> validate_triangulation(const GroupSpec& g, const Triangulation& T) {
    std::vector<std::string> bad;
    std::map<std::string, Vec3> num_of;
    for (auto& v : T.vertices) num_of[v.id] = v.numerator;

    __int128 covered = 0;
    std::map<std::pair<std::string, std::string>, int> side_count;
    for (auto& tri : T.triangles) {
        auto a = num_of.find(tri[0]), b = num_of.find(tri[1]), c = num_of.find(tri[2]);
        if (a == num_of.end() || b == num_of.end() || c == num_of.end()) {
            bad.push_back("triangle with unknown vertex");
            continue;
        }
        long long d = det3(a->second, b->second, c->second);
        if ((d < 0 ? -d : d) != g.r * g.r)
            bad.push_back("non-basic triangle (" + tri[0] + "," + tri[1] + "," + tri[2] +
                          ") det=" + std::to_string(d));
        covered += (d < 0 ? -d : d);
        for (int i = 0; i < 3; ++i) {
            auto e = std::minmax(tri[i], tri[(i + 1) % 3]);
            side_count[{e.first, e.second}]++;
            if (!T.edges.count({e.first, e.second}))
                bad.push_back("triangle side (" + e.first + "," + e.second + ") missing from edges");
        }
    }
    __int128 total = (__int128)g.r * g.r * g.r;
    if (covered != total) bad.push_back("covered volume does not equal the junior simplex");
    if ((long long)T.triangles.size() != g.r)
        bad.push_back("triangle count " + std::to_string(T.triangles.size()) + " != r");

    for (auto& [e, kind] : T.edges) {
        int expect = kind == EdgeKind::Boundary ? 1 : 2;
        auto it = side_count.find(e);
        int got = it == side_count.end() ? 0 : it->second;
        if (got != expect)
            bad.push_back("edge (" + e.first + "," + e.second + ") borders " + std::to_string(got) +
                          " triangles, expected " + std::to_string(expect));
    }

    // every corner and junior point must appear as a vertex
    auto juniors = junior_points(g);
    if (T.vertices.size() != juniors.size() + 3)
        bad.push_back("vertex set does not equal corners + junior points");

    // pairwise edge crossing / T-junction detection in the simplex plane
    std::vector<std::pair<std::string, std::string>> elist;
    for (auto& [e, k] : T.edges) elist.push_back(e);
    auto pt2 = [&](const std::string& id) { return detail::plane2d(num_of[id]); };
    auto seg_cross = [&](const std::pair<std::string, std::string>& e1,
                         const std::pair<std::string, std::string>& e2) {
        if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
            e1.second == e2.second)
            return false;
        auto p = pt2(e1.first), q = pt2(e1.second), r = pt2(e2.first), s = pt2(e2.second);
        auto d1 = detail::cross2(p, q, r), d2 = detail::cross2(p, q, s);
        auto d3 = detail::cross2(r, s, p), d4 = detail::cross2(r, s, q);
        return ((d1 > 0) != (d2 > 0)) && d1 != 0 && d2 != 0 && ((d3 > 0) != (d4 > 0)) && d3 != 0 &&
               d4 != 0;
    };
    for (size_t i = 0; i < elist.size(); ++i)
        for (size_t j = i + 1; j < elist.size(); ++j)
            if (seg_cross(elist[i], elist[j]))
                bad.push_back("edges (" + elist[i].first + "," + elist[i].second + ") and (" +
                              elist[j].first + "," + elist[j].second + ") cross");
    for (auto& v : T.vertices) {
        auto pv = pt2(v.id);
        for (auto& e : elist) {
            if (e.first == v.id || e.second == v.id) continue;
            auto p = pt2(e.first), q = pt2(e.second);
            if (detail::cross2(p, q, pv) != 0) continue;
            // collinear: strictly inside?
            if (std::min(p.first, q.first) <= pv.first && pv.first <= std::max(p.first, q.first) &&
                std::min(p.second, q.second) <= pv.second &&
                pv.second <= std::max(p.second, q.second) && !(pv == p) && !(pv == q))
                bad.push_back("vertex " + v.id + " lies inside edge (" + e.first + "," + e.second + ")");
        }
    }
    return bad;
}

} // namespace mckay
