#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include "mckay/quiver.hpp"
#include "mckay/reid.hpp"
#include "mckay/triangulation.hpp"

namespace mckay {

namespace detail {

inline std::string fmt2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

// equilateral projection of barycentric coordinates, ez bottom-left,
// ey bottom-right, ex on top (the layout of the figures)
struct SvgLayout {
    double width = 600.0, margin = 40.0;
    double side, height;

    SvgLayout() : side(width - 2 * margin), height(side * 0.8660254037844386) {}

    std::pair<double, double> place(const Vec3& num, long long r) const {
        double a = (double)num[0] / (double)r; // ex share
        double b = (double)num[1] / (double)r; // ey share
        double x = margin + side * (b + a * 0.5);
        double y = margin + height - height * a; // svg y grows downward
        return {x, y};
    }
};

} // namespace detail

inline std::string render_svg(const Triangulation& T, const EdgeMarking* marking = nullptr) {
    detail::SvgLayout ly;
    std::map<std::string, Vec3> num_of;
    for (auto& v : T.vertices) num_of[v.id] = v.numerator;

    std::string out;
    double H = 2 * ly.margin + ly.height;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt2(ly.width) +
           "\" height=\"" + detail::fmt2(H) + "\" viewBox=\"0 0 " + detail::fmt2(ly.width) + " " +
           detail::fmt2(H) + "\">\n";
    for (auto& [e, kind] : T.edges) {
        auto [x1, y1] = ly.place(num_of.at(e.first), T.group.r);
        auto [x2, y2] = ly.place(num_of.at(e.second), T.group.r);
        out += "  <line x1=\"" + detail::fmt2(x1) + "\" y1=\"" + detail::fmt2(y1) + "\" x2=\"" +
               detail::fmt2(x2) + "\" y2=\"" + detail::fmt2(y2) + "\" stroke=\"black\"";
        if (kind == EdgeKind::Tessellation) out += " stroke-dasharray=\"5 4\"";
        out += "/>\n";
    }
    for (auto& v : T.vertices) {
        auto [x, y] = ly.place(v.numerator, T.group.r);
        out += "  <circle cx=\"" + detail::fmt2(x) + "\" cy=\"" + detail::fmt2(y) +
               "\" r=\"3\" fill=\"black\"/>\n";
    }
    for (auto& v : T.vertices) {
        auto [x, y] = ly.place(v.numerator, T.group.r);
        out += "  <text x=\"" + detail::fmt2(x + 5) + "\" y=\"" + detail::fmt2(y - 5) +
               "\" font-size=\"11\">" + v.id + "</text>\n";
    }
    if (marking) {
        for (auto& [e, rec] : *marking) {
            auto [x1, y1] = ly.place(num_of.at(e.first), T.group.r);
            auto [x2, y2] = ly.place(num_of.at(e.second), T.group.r);
            out += "  <text x=\"" + detail::fmt2((x1 + x2) / 2) + "\" y=\"" +
                   detail::fmt2((y1 + y2) / 2) + "\" font-size=\"10\" fill=\"darkred\">chi" +
                   std::to_string(rec.character) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

inline void emit_svg(const Triangulation& T, const EdgeMarking* marking, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open " + path + " for writing");
    f << render_svg(T, marking);
}

inline std::string render_dot(const Quiver& q, const std::string& name = "mckay") {
    std::string out = "digraph " + name + " {\n";
    for (long long v : q.vertices) out += "  c" + std::to_string(v) + ";\n";
    for (auto& a : q.arrows)
        out += "  c" + std::to_string(a.tail) + " -> c" + std::to_string(a.head) + " [weight=" +
               std::to_string(a.weight) + "];\n";
    out += "}\n";
    return out;
}

inline void emit_dot(const Quiver& q, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open " + path + " for writing");
    f << render_dot(q);
}

} // namespace mckay
