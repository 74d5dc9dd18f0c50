#include <doctest.h>

#include "mckay/triangulation.hpp"
#include "test_util.hpp"

using namespace mckay;

namespace {

std::set<std::pair<std::string, std::string>> edge_set(const Triangulation& T) {
    std::set<std::pair<std::string, std::string>> s;
    for (auto& [e, k] : T.edges) s.insert(e);
    return s;
}

std::set<std::pair<std::string, std::string>> golden_edges(const std::string& name) {
    auto j = testutil::load_golden(name);
    std::set<std::pair<std::string, std::string>> s;
    for (auto& e : j["edges"]) s.insert(std::make_pair(e[0].get<std::string>(), e[1].get<std::string>()));
    return s;
}

std::set<std::array<std::string, 3>> golden_triangles(const std::string& name) {
    auto j = testutil::load_golden(name);
    std::set<std::array<std::string, 3>> s;
    for (auto& t : j["triangles"]) s.insert(std::array<std::string, 3>{t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
    return s;
}

const LineLog& line_named(const Triangulation& T, const std::string& name) {
    for (auto& ln : T.log.lines)
        if (ln.name == name) return ln;
    throw std::runtime_error("no line " + name);
}

} // namespace

TEST_CASE("corner_data reproduces the worked reductions") {
    auto g = parse_group("1/15(1,2,12)");
    auto cx = corner_data(g, "ex");
    CHECK(cx.r2 == 5);
    CHECK(cx.a2 == 2);
    CHECK(cx.hj == HJSequence{3, 2});
    auto cz = corner_data(g, "ez");
    CHECK(cz.r2 == 15);
    CHECK(cz.a2 == 2);
    CHECK(cz.hj == HJSequence{8, 2});
    auto cy = corner_data(g, "ey");
    CHECK(cy.r2 == 5);
    CHECK(cy.a2 == 4);
    CHECK(cy.hj == HJSequence{2, 2, 2, 2});

    auto g28 = parse_group("1/28(1,3,24)");
    auto cy28 = corner_data(g28, "ey");
    CHECK(cy28.r2 == 7);
    CHECK(cy28.a2 == 6);
    CHECK(cy28.hj == HJSequence{2, 2, 2, 2, 2, 2});
    CHECK_THROWS_AS(corner_data(parse_group("1/1(0,0,0)"), "ex"), domain_error);
}

TEST_CASE("family corner sequences follow the theorem shapes") {
    // HJ_z = [l+2, 2 x (k-1)], HJ_y = (t-1) twos, HJ_x = [k+1, 2 x ((t-1)/k - 1)]
    for (auto spec : {"1/15(1,2,12)", "1/28(1,3,24)", "1/40(1,3,36)", "1/45(1,4,40)"}) {
        auto g = parse_group(spec);
        auto fp = family_params(g);
        REQUIRE(fp.has_value());
        auto hz = corner_data(g, "ez").hj;
        REQUIRE((long long)hz.size() == fp->k);
        CHECK(hz[0] == fp->ell + 2);
        for (size_t i = 1; i < hz.size(); ++i) CHECK(hz[i] == 2);
        auto hy = corner_data(g, "ey").hj;
        CHECK((long long)hy.size() == fp->t - 1);
        for (long long v : hy) CHECK(v == 2);
        auto hx = corner_data(g, "ex").hj;
        CHECK(hx[0] == fp->k + 1);
        CHECK((long long)hx.size() == (fp->t - 1) / fp->k);
    }
}

TEST_CASE("triangulation of 1/15(1,2,12) matches the worked example") {
    auto g = parse_group("1/15(1,2,12)");
    auto T = build_triangulation(g);
    CHECK(T.vertices.size() == 11);
    CHECK(T.triangles.size() == 15);
    for (auto& tri : T.triangles) {
        long long d = det3(T.vertex(tri[0]).numerator, T.vertex(tri[1]).numerator,
                           T.vertex(tri[2]).numerator);
        CHECK((d < 0 ? -d : d) == 225);
    }
    // the winner line out of ez carries 8 -> 6 -> 5 -> 3 -> 2
    auto& winner = line_named(T, "ez->E1");
    CHECK(winner.labels == std::vector<long long>{8, 6, 5, 3, 2});
    CHECK(winner.outcome == "boundary");
    CHECK(winner.trace == std::vector<std::string>{"E1", "E2", "E3", "E4", "E5"});

    CHECK(edge_set(T) == golden_edges("triangulation_15_1_2_12.json"));
    CHECK(T.triangles == golden_triangles("triangulation_15_1_2_12.json"));
    CHECK(validate_triangulation(g, T).empty());
}

TEST_CASE("triangulations of 1/6(1,1,4) and 1/7(1,1,5)") {
    auto g6 = parse_group("1/6(1,1,4)");
    auto T6 = build_triangulation(g6);
    CHECK(T6.triangles.size() == 6);
    CHECK(edge_set(T6) == golden_edges("triangulation_6_1_1_4.json"));
    CHECK(T6.triangles == golden_triangles("triangulation_6_1_1_4.json"));
    CHECK(validate_triangulation(g6, T6).empty());
    CHECK(line_named(T6, "ez->E1").labels == std::vector<long long>{6, 4, 2});

    auto g7 = parse_group("1/7(1,1,5)");
    auto T7 = build_triangulation(g7);
    CHECK(T7.triangles.size() == 7);
    CHECK(edge_set(T7) == golden_edges("triangulation_7_1_1_5.json"));
    CHECK(T7.triangles == golden_triangles("triangulation_7_1_1_5.json"));
    CHECK(validate_triangulation(g7, T7).empty());
    // three-way tie at the central divisor
    auto& zline = line_named(T7, "ez->E1");
    CHECK(zline.labels == std::vector<long long>{7, 5, 3});
    CHECK(zline.outcome == "tie");
}

TEST_CASE("trivial group short-circuits to the bare simplex") {
    auto g = parse_group("1/1(0,0,0)");
    auto T = build_triangulation(g);
    CHECK(T.vertices.size() == 3);
    CHECK(T.triangles.size() == 1);
    CHECK(T.edges.size() == 3);
    CHECK(validate_triangulation(g, T).empty());
}

TEST_CASE("is_basic determinant test") {
    auto g = parse_group("1/15(1,2,12)");
    CHECK(is_basic(parse_group("1/1(0,0,0)"), {1, 0, 0}, {0, 1, 0}, {0, 0, 1}));
    CHECK(is_basic(g, {0, 0, 15}, {1, 2, 12}, {8, 1, 6}));
    // (ez, E2, E6) spans twice the unimodular volume
    CHECK(det3({0, 0, 15}, {2, 4, 9}, {8, 1, 6}) == -450);
    CHECK(!is_basic(g, {0, 0, 15}, {2, 4, 9}, {8, 1, 6}));
    // basic-ness is a lattice property, not membership in the fan:
    // (ez, E1, E7) is unimodular although it is not a face
    CHECK(det3({0, 0, 15}, {1, 2, 12}, {9, 3, 3}) == -225);
    CHECK(is_basic(g, {0, 0, 15}, {1, 2, 12}, {9, 3, 3}));
}

TEST_CASE("step-1 recursion holds at every corner") {
    for (auto spec : {"1/15(1,2,12)", "1/28(1,3,24)", "1/30(1,4,25)", "1/11(1,2,8)", "1/9(1,2,6)"}) {
        auto g = parse_group(spec);
        auto T = build_triangulation(g);
        std::map<std::string, Vec3> num;
        for (auto& v : T.vertices) num[v.id] = v.numerator;
        for (auto& fan : T.log.step1) {
            Vec3 corner = num.at(fan.corner);
            std::vector<Vec3> L;
            L.push_back(num.at(fan.edge_prev) - corner);
            for (auto& [to, label] : fan.segments) L.push_back(num.at(to) - corner);
            L.push_back(num.at(fan.edge_next) - corner);
            auto hj = fan.data.hj;
            REQUIRE(L.size() == hj.size() + 2);
            for (size_t i = 1; i + 1 < L.size(); ++i)
                CHECK(L[i + 1] == hj[i - 1] * L[i] - L[i - 1]);
        }
    }
}

TEST_CASE("random valid groups triangulate to r basic triangles") {
    // every well-formed datum with r <= 24 that the build accepts must
    // produce a valid basic triangulation covering the simplex
    int built = 0;
    for (long long r = 2; r <= 24; ++r)
        for (long long w1 = 1; w1 < r; ++w1)
            for (long long w2 = w1; w2 < r; ++w2) {
                long long w3 = (2 * r - w1 - w2) % r;
                if (w3 == 0 || w3 < w2) continue;
                GroupSpec g;
                g.r = r;
                g.weights = {w1, w2, w3};
                try {
                    validate_group(g);
                } catch (const domain_error&) {
                    continue;
                }
                auto T = build_triangulation(g);
                auto bad = validate_triangulation(g, T);
                if (!bad.empty()) {
                    CAPTURE(g.str());
                    CAPTURE(bad[0]);
                    CHECK(bad.empty());
                }
                ++built;
            }
    CHECK(built > 100);
}

TEST_CASE("family groups: the long ez line survives to the far boundary") {
    for (auto spec : {"1/15(1,2,12)", "1/28(1,3,24)", "1/40(1,3,36)", "1/45(1,4,40)"}) {
        auto g = parse_group(spec);
        auto T = build_triangulation(g);
        int boundary_reachers = 0;
        for (auto& ln : T.log.lines) {
            if (ln.outcome == "boundary") {
                ++boundary_reachers;
                CHECK(ln.corner == "ez");
                CHECK(ln.labels[0] == corner_data(g, "ez").hj[0]);
            }
            // every ey and every other ez segment stops at its first point
            if (ln.corner == "ey" || (ln.corner == "ez" && ln.labels[0] == 2))
                CHECK(ln.trace.size() == 1);
        }
        CHECK(boundary_reachers == 1);
    }
}

TEST_CASE("validate_triangulation flags a corrupted triangulation") {
    auto g = parse_group("1/6(1,1,4)");
    auto T = build_triangulation(g);
    // replace two faces of the ey fan by a wrong split: the quad
    // (ey,E1,E2) + (ey,E2,E3) redrawn as (ey,E1,E3) + (E1,E2,E3)
    T.triangles.erase({"E1", "E2", "ey"});
    T.triangles.erase({"E2", "E3", "ey"});
    T.triangles.insert({"E1", "E3", "ey"});
    T.triangles.insert({"E1", "E2", "E3"});
    auto bad = validate_triangulation(g, T);
    CHECK(!bad.empty());
    bool names_nonbasic = false;
    for (auto& b : bad)
        if (b.find("non-basic") != std::string::npos) names_nonbasic = true;
    CHECK(names_nonbasic);
}

TEST_CASE("edge kinds partition the drawn picture") {
    auto g = parse_group("1/15(1,2,12)");
    auto T = build_triangulation(g);
    int boundary = 0, fan = 0, ext = 0, tess = 0;
    for (auto& [e, k] : T.edges) {
        if (k == EdgeKind::Boundary) ++boundary;
        if (k == EdgeKind::Fan) ++fan;
        if (k == EdgeKind::Extension) ++ext;
        if (k == EdgeKind::Tessellation) ++tess;
    }
    CHECK(boundary == 5);
    CHECK(fan == 8);  // 2+4+2 step-1 segments
    CHECK(ext == 6);  // E1..E5 continuation + E6->E1 + E7->E3
    CHECK(tess == 6); // two side-2 regular faces
}
