#include <doctest.h>

#include <algorithm>
#include <set>

#include "toricsyz/lattice.hpp"

using namespace toricsyz;

TEST_CASE("lattice_points: small dilates") {
    SUBCASE("unit square tower, k=1") {
        auto pts = lattice_points({0, 1}, 1);
        REQUIRE(pts.size() == 6);
        std::vector<LatticePoint> expect = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
        CHECK(pts == expect);
    }
    SUBCASE("trapezoid delta=2 d=2, k=1 has rows 3,4,5") {
        auto pts = lattice_points({2, 2}, 1);
        REQUIRE(pts.size() == 12);
        long rows[3] = {0, 0, 0};
        for (auto& pt : pts) ++rows[pt.y];
        CHECK(rows[0] == 3);
        CHECK(rows[1] == 4);
        CHECK(rows[2] == 5);
    }
    SUBCASE("k=0 is the origin for any spec") {
        for (long delta : {0L, 1L, 5L}) {
            auto pts = lattice_points({delta, 3}, 0);
            REQUIRE(pts.size() == 1);
            CHECK(pts[0] == LatticePoint{0, 0});
        }
    }
    SUBCASE("points come out in lex (y, x) order") {
        auto pts = lattice_points({3, 2}, 2);
        CHECK(std::is_sorted(pts.begin(), pts.end()));
    }
}

TEST_CASE("ehrhart_count: closed form") {
    CHECK(ehrhart_count({0, 1}, 2) == 15);
    CHECK(ehrhart_count({0, 3}, 1) == 12);
    CHECK(ehrhart_count({4, 7}, 0) == 1);
    CHECK_THROWS_AS(ehrhart_count({0, 1}, -1), std::invalid_argument);
    CHECK_THROWS_AS(ehrhart_count({0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ehrhart_count({-1, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ehrhart_count({0, 1L << 40}, 1L << 30), std::overflow_error);
}

TEST_CASE("enumeration agrees with the Ehrhart quadratic") {
    for (long delta = 0; delta <= 4; ++delta)
        for (long d = 1; d <= 9; d += 2)
            for (long k = 0; k <= 5; ++k) {
                CAPTURE(delta);
                CAPTURE(d);
                CAPTURE(k);
                CHECK(static_cast<long long>(lattice_points({delta, d}, k).size()) ==
                      ehrhart_count({delta, d}, k));
            }
}

TEST_CASE("constants: worked examples") {
    SUBCASE("(0,3)") {
        auto pc = constants({0, 3});
        CHECK(pc.r == 11);
        CHECK(pc.n == 12);
        CHECK(pc.c_delta == Rational(2));
        CHECK(pc.e_delta == Rational(1, 3));
        CHECK(pc.n1_algebraic == Rational(4));
        CHECK(pc.interior == 2);
        CHECK(pc.height_one == 4);
    }
    SUBCASE("(1,2)") {
        auto pc = constants({1, 2});
        CHECK(pc.c_delta == Rational(3));
        CHECK(pc.e_delta == Rational(0));
        CHECK(pc.r == 9);
    }
    SUBCASE("(2,2)") {
        auto pc = constants({2, 2});
        CHECK(pc.r == 11);
        CHECK(pc.n == 12);
        CHECK(pc.c_delta == Rational(5));
    }
}

TEST_CASE("lattice identities across a grid") {
    for (long delta = 0; delta <= 8; ++delta) {
        for (long d = 1; d <= 12; ++d) {
            CAPTURE(delta);
            CAPTURE(d);
            auto pc = constants({delta, d});
            const long g = gcd_with_two(delta);

            // r = 3d + C_delta, and Pick: n = A + B/2 + 1
            CHECK(Rational(pc.r) == Rational(3 * d) + pc.c_delta);
            const long A = 2 * d + delta;
            const long B = 2 * d + delta + 2 + g;
            CHECK(pc.n == A + B / 2 + 1);

            // algebraic-closed-form n1 equals the height-one count on the whole grid
            CHECK(pc.n1_algebraic == Rational(pc.height_one));
            // the geometric interior differs from it by exactly gcd(delta, 2);
            // the even-delta specialization is interior + 2
            CHECK(pc.interior + g == pc.height_one);
            if (delta % 2 == 0) CHECK(Rational(pc.interior + 2) == pc.n1_algebraic);
        }
    }
}

TEST_CASE("dilate monotonicity: k-dilate points sit inside the (k+1)-dilate") {
    for (long delta : {0L, 3L}) {
        for (long k = 0; k <= 4; ++k) {
            auto small = lattice_points({delta, 2}, k);
            auto big = lattice_points({delta, 2}, k + 1);
            std::set<std::pair<long, long>> bigset;
            for (auto& pt : big) bigset.insert({pt.x, pt.y});
            for (auto& pt : small) CHECK(bigset.count({pt.x, pt.y}) == 1);
        }
    }
}
