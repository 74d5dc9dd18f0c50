#include <doctest.h>

#include "mckay/lattice.hpp"
#include "test_util.hpp"

using namespace mckay;

TEST_CASE("hj_expand on the worked fractions") {
    CHECK(hj_expand(15, 2) == HJSequence{8, 2});
    CHECK(hj_expand(5, 4) == HJSequence{2, 2, 2, 2});
    CHECK(hj_expand(5, 2) == HJSequence{3, 2});
    CHECK(hj_expand(7, 5) == HJSequence{2, 2, 3});
}

TEST_CASE("hj_expand of r/(r-1) is a tuple of twos") {
    for (long long r = 2; r <= 40; ++r) {
        auto seq = hj_expand(r, r - 1);
        CHECK(seq.size() == (size_t)r - 1);
        for (long long k : seq) CHECK(k == 2);
    }
}

TEST_CASE("hj_expand rejects bad input") {
    CHECK_THROWS_AS(hj_expand(6, 6), domain_error);
    CHECK_THROWS_AS(hj_expand(6, 0), domain_error);
    CHECK_THROWS_AS(hj_expand(6, 9), domain_error);
    CHECK_THROWS_AS(hj_expand(6, 4), domain_error); // gcd 2
    CHECK_THROWS_AS(hj_expand(2'000'000, 3), domain_error);
}

TEST_CASE("hj_evaluate inverts hj_expand") {
    CHECK(hj_evaluate({8, 2}) == std::make_pair(15ll, 2ll));
    CHECK(hj_evaluate({2}) == std::make_pair(2ll, 1ll));
    CHECK(hj_evaluate({3, 2}) == std::make_pair(5ll, 2ll));
    CHECK_THROWS_AS(hj_evaluate({}), domain_error);
    CHECK_THROWS_AS(hj_evaluate({3, 1}), domain_error);
}

TEST_CASE("hj round trip over all coprime pairs up to 500") {
    for (long long r = 2; r <= 500; ++r)
        for (long long a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            auto seq = hj_expand(r, a);
            CHECK(!seq.empty());
            for (long long k : seq) CHECK(k >= 2);
            auto [rr, aa] = hj_evaluate(seq);
            REQUIRE(rr == r);
            REQUIRE(aa == a);
        }
}

TEST_CASE("det3 values") {
    CHECK(det3({1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
    CHECK(det3({0, 0, 15}, {1, 2, 12}, {8, 1, 6}) == -225);
    CHECK(det3({1, 2, 12}, {2, 4, 9}, {1, 2, 12}) == 0);
}

TEST_CASE("det3 is alternating") {
    testutil::Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        Vec3 u = {rng.range(-50, 50), rng.range(-50, 50), rng.range(-50, 50)};
        Vec3 v = {rng.range(-50, 50), rng.range(-50, 50), rng.range(-50, 50)};
        Vec3 w = {rng.range(-50, 50), rng.range(-50, 50), rng.range(-50, 50)};
        long long d = det3(u, v, w);
        CHECK(det3(v, u, w) == -d);
        CHECK(det3(u, w, v) == -d);
        CHECK(det3(w, v, u) == -d);
    }
}

TEST_CASE("primitive_vector normalizes content and sign") {
    CHECK(primitive_vector({-15, 30, 15}) == Vec3{1, -2, -1});
    CHECK(primitive_vector({1, 0, 0}) == Vec3{1, 0, 0});
    CHECK(primitive_vector({0, -4, 2}) == Vec3{0, 2, -1});
    CHECK_THROWS_AS(primitive_vector({0, 0, 0}), domain_error);

    testutil::Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        Vec3 v = {rng.range(-40, 40), rng.range(-40, 40), rng.range(-40, 40)};
        if (v == Vec3{0, 0, 0}) continue;
        Vec3 p = primitive_vector(v);
        CHECK(gcd3(p[0], p[1], p[2]) == 1);
        for (long long x : p) {
            if (x != 0) {
                CHECK(x > 0);
                break;
            }
        }
    }
}
