#pragma once

#include <map>
#include <string>

#include "mckay/triangulation.hpp"

namespace mckay {

// Marking of one internal edge: the common character of the coprime
// monomial pair generating the invariant ray perpendicular to the edge.
struct MarkingRecord {
    Character character = 0;
    Vec3 m_plus = {0, 0, 0};
    Vec3 m_minus = {0, 0, 0};
};

using EdgeKey = std::pair<std::string, std::string>;
using EdgeMarking = std::map<EdgeKey, MarkingRecord>;

inline MarkingRecord mark_edge(const GroupSpec& g, const JuniorPoint& u, const JuniorPoint& w) {
    Vec3 n = cross(u.numerator, w.numerator);
    if (n == Vec3{0, 0, 0})
        throw domain_error("mark_edge: vertices " + u.id + "," + w.id + " span no plane");
    Vec3 p = primitive_vector(n);
    long long residue = weight_pairing_mod_r(g, p);
    long long lambda = g.r / std::gcd(g.r, residue == 0 ? g.r : residue);
    Vec3 m = lambda * p;
    if (weight_pairing_mod_r(g, m) != 0)
        throw internal_error("mark_edge: no invariant multiple of " + vec_str(p));
    MarkingRecord rec;
    for (int i = 0; i < 3; ++i) {
        if (m[i] > 0) rec.m_plus[i] = m[i];
        if (m[i] < 0) rec.m_minus[i] = -m[i];
    }
    rec.character = monomial_character(g, rec.m_plus);
    if (rec.character != monomial_character(g, rec.m_minus))
        throw internal_error("mark_edge: monomial pair characters disagree");
    return rec;
}

inline bool is_boundary_pair(const JuniorPoint& u, const JuniorPoint& w) {
    for (int i = 0; i < 3; ++i)
        if (u.numerator[i] == 0 && w.numerator[i] == 0) return true;
    return false;
}

// Marks every edge of T not contained in the simplex boundary.
inline EdgeMarking mark_all(const GroupSpec& g, const Triangulation& T) {
    std::map<std::string, JuniorPoint> by_id;
    for (auto& v : T.vertices) by_id[v.id] = v;
    EdgeMarking marking;
    for (auto& [e, kind] : T.edges) {
        const JuniorPoint& u = by_id.at(e.first);
        const JuniorPoint& w = by_id.at(e.second);
        if (is_boundary_pair(u, w)) continue;
        marking[e] = mark_edge(g, u, w);
    }
    return marking;
}

} // namespace mckay
