#pragma once

#include <json.hpp>

#include "mckay/classify.hpp"
#include "mckay/hall.hpp"
#include "mckay/triangulation.hpp"

namespace mckay {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Triangulation& T) {
    ordered_json j;
    j["group"] = T.group.str();
    j["r"] = T.group.r;
    ordered_json verts = ordered_json::array();
    for (auto& v : T.vertices)
        verts.push_back({{"id", v.id}, {"numerator", {v.numerator[0], v.numerator[1], v.numerator[2]}}, {"r", v.r}});
    j["vertices"] = verts;
    ordered_json edges = ordered_json::array();
    for (auto& [e, kind] : T.edges) edges.push_back({e.first, e.second});
    j["edges"] = edges;
    ordered_json tris = ordered_json::array();
    for (auto& t : T.triangles) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = tris;

    ordered_json step1 = ordered_json::array();
    for (auto& fan : T.log.step1) {
        ordered_json f;
        f["corner"] = fan.corner;
        f["reduced_order"] = fan.data.r2;
        f["reduced_weight"] = fan.data.a2;
        f["hj"] = fan.data.hj;
        f["orientation_flipped"] = fan.flipped;
        f["edge_prev"] = fan.edge_prev;
        f["edge_next"] = fan.edge_next;
        ordered_json segs = ordered_json::array();
        for (auto& [to, label] : fan.segments) segs.push_back({{"to", to}, {"label", label}});
        f["segments"] = segs;
        step1.push_back(f);
    }
    ordered_json lines = ordered_json::array();
    for (auto& ln : T.log.lines) {
        ordered_json l;
        l["name"] = ln.name;
        l["corner"] = ln.corner;
        l["trace"] = ln.trace;
        l["labels"] = ln.labels;
        l["outcome"] = ln.outcome;
        lines.push_back(l);
    }
    ordered_json events = ordered_json::array();
    for (auto& ev : T.log.events) {
        ordered_json e;
        e["at"] = ev.at;
        ordered_json parts = ordered_json::array();
        for (auto& [name, label] : ev.participants) parts.push_back({{"line", name}, {"label", label}});
        e["participants"] = parts;
        e["tie"] = ev.tie;
        if (!ev.tie) {
            e["winner"] = ev.winner;
            e["new_label"] = ev.new_label;
            e["low_label"] = ev.low_label;
        }
        events.push_back(e);
    }
    ordered_json step3 = ordered_json::array();
    for (auto& t : T.log.step3) {
        ordered_json s;
        s["corners"] = {t.corners[0], t.corners[1], t.corners[2]};
        s["side"] = t.side;
        ordered_json ae = ordered_json::array();
        for (auto& [a, b] : t.added_edges) ae.push_back({a, b});
        s["added_edges"] = ae;
        s["added_vertices"] = t.added_vertices;
        step3.push_back(s);
    }
    j["step_log"] = {{"step1", step1}, {"step2", {{"lines", lines}, {"events", events}}}, {"step3", step3}};
    return j;
}

inline ordered_json to_json(const EdgeMarking& marking) {
    ordered_json arr = ordered_json::array();
    for (auto& [e, rec] : marking) {
        ordered_json m;
        m["edge"] = {e.first, e.second};
        m["character"] = rec.character;
        m["m_plus"] = {rec.m_plus[0], rec.m_plus[1], rec.m_plus[2]};
        m["m_minus"] = {rec.m_minus[0], rec.m_minus[1], rec.m_minus[2]};
        arr.push_back(m);
    }
    return arr;
}

inline ordered_json to_json(const SheafImage& img) {
    ordered_json j;
    j["character"] = img.character;
    j["case"] = sheaf_case_name(img.kind);
    j["degree"] = img.degree;
    j["twist_endpoints"] = img.twist_endpoints;
    if (img.kind == SheafCase::NoEdgeDivisor)
        j["support"] = "unresolved";
    else
        j["support"] = img.support;
    if (!img.meeting_divisor.empty()) j["meeting_divisor"] = img.meeting_divisor;
    j["symbolic_tag"] = img.symbolic_tag;
    return j;
}

inline ordered_json to_json(const HallElement& e) {
    ordered_json arr = ordered_json::array();
    for (auto& [k, c] : e.coeffs)
        arr.push_back({{"class", k}, {"a", c.a.str()}, {"b", c.b.str()}});
    return arr;
}

inline std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace mckay
