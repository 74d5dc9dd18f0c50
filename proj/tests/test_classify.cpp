#include <doctest.h>

#include "mckay/classify.hpp"
#include "test_util.hpp"

using namespace mckay;

namespace {

ClassifyResult classify_group(const std::string& spec) {
    auto g = parse_group(spec);
    auto T = build_triangulation(g);
    return classify_all(g, mark_all(g, T));
}

const SheafImage& image_of(const ClassifyResult& res, Character c) {
    return res.images.at((size_t)c - 1);
}

} // namespace

TEST_CASE("classification cases on 1/6(1,1,4)") {
    auto res = classify_group("1/6(1,1,4)");
    REQUIRE(res.errors.empty());
    auto& c1 = image_of(res, 1);
    CHECK(c1.kind == SheafCase::Chain);
    CHECK(c1.degree == -1);
    CHECK(c1.twist_endpoints == std::vector<std::string>{"E3", "ez"});
    CHECK(c1.support == std::vector<std::string>{"E1", "E2"});
    auto& c3 = image_of(res, 3);
    CHECK(c3.kind == SheafCase::NoEdgeDivisor);
    CHECK(c3.degree == 0);
    CHECK(c3.support.empty()); // reported unresolved
}

TEST_CASE("triple chain on 1/7(1,1,5)") {
    auto res = classify_group("1/7(1,1,5)");
    REQUIRE(res.errors.empty());
    auto& c1 = image_of(res, 1);
    CHECK(c1.kind == SheafCase::TripleChain);
    CHECK(c1.degree == -1);
    CHECK(c1.meeting_divisor == "E3");
    CHECK(c1.twist_endpoints == std::vector<std::string>{"ex", "ey", "ez"});
    CHECK(c1.support == std::vector<std::string>{"E1", "E2", "E3"});
}

TEST_CASE("classification of 1/15(1,2,12)") {
    auto res = classify_group("1/15(1,2,12)");
    REQUIRE(res.errors.empty());
    auto& c1 = image_of(res, 1);
    CHECK(c1.kind == SheafCase::Chain);
    CHECK(c1.twist_endpoints == std::vector<std::string>{"E8", "ez"});
    CHECK(c1.support == std::vector<std::string>{"E6", "E7"});
    auto& c2 = image_of(res, 2);
    CHECK(c2.twist_endpoints == std::vector<std::string>{"E5", "ez"});
    CHECK(c2.support == std::vector<std::string>{"E1", "E2", "E3", "E4"});
    auto& c4 = image_of(res, 4);
    CHECK(c4.kind == SheafCase::SingleCurve);
    CHECK(c4.degree == 0);
    CHECK(c4.support == std::vector<std::string>{"E4", "E8"});
    auto& c10 = image_of(res, 10);
    CHECK(c10.kind == SheafCase::SingleCurve);
}

TEST_CASE("classification of 1/28(1,3,24) chi_4 path") {
    auto res = classify_group("1/28(1,3,24)");
    REQUIRE(res.errors.empty());
    auto& c4 = image_of(res, 4);
    CHECK(c4.kind == SheafCase::Chain);
    CHECK(c4.twist_endpoints == std::vector<std::string>{"E14", "ey"});
    CHECK(c4.support == std::vector<std::string>{"E11", "E6"});
    // the ex-to-ey chains belong to chi_{k(k+1)} and chi_s
    auto& c12 = image_of(res, 12);
    CHECK(c12.twist_endpoints == std::vector<std::string>{"ex", "ey"});
    CHECK(c12.support == std::vector<std::string>{"E10", "E14", "E4"});
    auto& c24 = image_of(res, 24);
    CHECK(c24.twist_endpoints == std::vector<std::string>{"ex", "ey"});
}

TEST_CASE("classify_character rejects the trivial character and weird sets") {
    EdgeMarking m;
    m[{"E1", "E2"}] = {5, {1, 0, 0}, {0, 1, 0}};
    m[{"E3", "E4"}] = {5, {1, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(classify_character(m, 0), domain_error);
    // two disjoint components is an unrecognized configuration
    CHECK_THROWS_WITH_AS(classify_character(m, 5), doctest::Contains("unrecognized"), domain_error);
    // a cycle is unrecognized as well
    EdgeMarking cyc;
    cyc[{"E1", "E2"}] = {5, {}, {}};
    cyc[{"E2", "E3"}] = {5, {}, {}};
    cyc[{"E1", "E3"}] = {5, {}, {}};
    CHECK_THROWS_AS(classify_character(cyc, 5), domain_error);
}

TEST_CASE("degenerate small group classifies cleanly") {
    auto res = classify_group("1/3(1,1,1)");
    REQUIRE(res.errors.empty());
    REQUIRE(res.images.size() == 2);
    CHECK(image_of(res, 1).kind == SheafCase::TripleChain);
    CHECK(image_of(res, 2).kind == SheafCase::NoEdgeDivisor);
}

TEST_CASE("predicted_table equals classify_all on the family set") {
    struct Case { long long k, s; };
    for (auto c : {Case{1, 4}, Case{2, 12}, Case{3, 24}, Case{3, 36}, Case{4, 40}, Case{5, 60}}) {
        GroupSpec g;
        g.r = 1 + c.k + c.s;
        g.weights = {1, c.k, c.s};
        auto fp = family_params(g);
        REQUIRE(fp.has_value());
        auto T = build_triangulation(g);
        auto res = classify_all(g, mark_all(g, T));
        REQUIRE(res.errors.empty());
        auto predicted = predicted_table(*fp);
        REQUIRE((long long)predicted.size() == c.k + 1);
        for (auto& p : predicted) {
            CAPTURE(g.str());
            CAPTURE(p.character);
            CHECK(image_of(res, p.character) == p);
        }
    }
}

TEST_CASE("predicted_table respects permuted weights") {
    auto g = parse_group("1/15(2,12,1)");
    auto fp = family_params(g);
    REQUIRE(fp.has_value());
    auto T = build_triangulation(g);
    auto res = classify_all(g, mark_all(g, T));
    REQUIRE(res.errors.empty());
    for (auto& p : predicted_table(*fp)) CHECK(image_of(res, p.character) == p);
}

TEST_CASE("character_condition_check on the worked groups and a negative control") {
    for (auto spec : {"1/28(1,3,24)", "1/15(1,2,12)", "1/40(1,3,36)"}) {
        auto g = parse_group(spec);
        auto fp = family_params(g);
        REQUIRE(fp.has_value());
        auto T = build_triangulation(g);
        auto rep = character_condition_check(mark_all(g, T), *fp);
        CHECK(rep.ok);
        CHECK(rep.offenders.empty());
    }
    // synthetic marking carrying chi_5 with k = 3 violates all three conditions
    FamilyParams fp;
    fp.k = 3;
    fp.s = 24;
    fp.r = 28;
    fp.t = 7;
    EdgeMarking synthetic;
    synthetic[{"E1", "E2"}] = {5, {}, {}};
    auto rep = character_condition_check(synthetic, fp);
    CHECK(!rep.ok);
    REQUIRE(rep.offenders.size() == 1);
    CHECK(rep.offenders[0] == 5);
}

TEST_CASE("h0 statistics and the corollary bound") {
    auto g = parse_group("1/28(1,3,24)");
    auto fp = family_params(g);
    auto T = build_triangulation(g);
    auto marking = mark_all(g, T);
    auto st = h0_stats(g, marking, *fp);
    CHECK(st.lower_bound == Rational(21, 2)); // ((k-1)s - 2k)/(k+1) = 42/4
    CHECK(st.h0_count == 16);
    CHECK(st.bound_holds);
    CHECK(st.ratio == Rational(16, 27));

    // k = 1: the bound is -1, trivially nonbinding
    auto g6 = parse_group("1/6(1,1,4)");
    auto st6 = h0_stats(g6, mark_all(g6, build_triangulation(g6)), *family_params(g6));
    CHECK(st6.lower_bound == Rational(-1));
    CHECK(st6.bound_holds);
}

TEST_CASE("bound ratio converges to (k-1)/(k+1) at exact rate k/(r-1)") {
    for (long long s : {12, 24, 36, 48, 60}) {
        long long k = 3;
        FamilyParams fp;
        fp.k = k;
        fp.s = s;
        fp.r = 1 + k + s;
        fp.t = fp.r / (k + 1);
        Rational lb((k - 1) * s - 2 * k, k + 1);
        Rational ratio = lb / Rational(fp.r - 1);
        Rational target(k - 1, k + 1);
        Rational diff = target - ratio;
        CHECK(diff == Rational(k, fp.r - 1)); // the exact identity
        CHECK(diff <= Rational(k, s));        // its 1/s-order envelope
    }
}
