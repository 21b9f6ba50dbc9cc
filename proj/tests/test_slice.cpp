#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/slice.hpp"

#include <unordered_set>

using namespace ga;

TEST_CASE("slice inventory along the unit axis") {
    auto ga = ga_vertices();
    auto slices = slice_ga(ga, GoldenQuaternion::one());
    REQUIRE(slices.size() == 7);

    GoldenNumber th = GoldenNumber::tau() * GoldenNumber(Rational(1, 2));
    GoldenNumber h{Rational(1, 2)};
    GoldenNumber msh = -(GoldenNumber::sigma() * GoldenNumber(Rational(1, 2)));
    std::vector<GoldenNumber> levels = {th, h, msh, GoldenNumber(0), -msh, -h, -th};
    std::vector<std::size_t> counts = {10, 20, 10, 20, 10, 20, 10};
    std::size_t total = 0;
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(slices[i].level == levels[i]);
        CHECK(slices[i].points.size() == counts[i]);
        total += slices[i].points.size();
        for (const auto& p : slices[i].points)
            CHECK(scalar_product(slices[i].axis, p) == slices[i].level);
    }
    CHECK(total == 100);

    CHECK(slices[0].shape_tag == "regular pentagonal antiprism");
    CHECK(slices[6].shape_tag == "regular pentagonal antiprism");
    CHECK(slices[1].shape_tag == "dodecahedron");
    CHECK(slices[5].shape_tag == "dodecahedron");

    SUBCASE("top and bottom slices congruent") {
        CHECK(distance_multiset(slices[0].points) == distance_multiset(slices[6].points));
        CHECK(distance_multiset(slices[1].points) == distance_multiset(slices[5].points));
    }

    SUBCASE("top slice closed form") {
        const auto& k = icosian_constants();
        std::unordered_set<GoldenQuaternion> expected;
        GoldenQuaternion bm = GoldenQuaternion::one();
        for (int m = 0; m < 5; ++m) {
            GoldenQuaternion bmc = bm.conjugate();
            expected.insert(bmc * k.c * bm);
            expected.insert(bmc * k.c.conjugate() * bm);
            bm = bm * k.b;
        }
        std::unordered_set<GoldenQuaternion> got(slices[0].points.begin(),
                                                 slices[0].points.end());
        CHECK(got == expected);
    }
}

TEST_CASE("slices along other axes") {
    auto ga = ga_vertices();
    auto slices = slice_ga(ga, GoldenQuaternion::e3());
    std::size_t total = 0;
    for (const auto& s : slices) total += s.points.size();
    CHECK(total == 100);
    CHECK_THROWS_AS(slice_ga(ga, GoldenQuaternion{1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("slice decomposition") {
    auto ga = ga_vertices();
    auto slices = slice_ga(ga, GoldenQuaternion::one());
    FiniteGroup stab = build_axis_stabilizer_group();

    SUBCASE("upper dodecahedron splits 10+10") {
        auto parts = decompose_slice(slices[1], stab);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].size() == 10);
        CHECK(parts[1].size() == 10);
    }

    SUBCASE("equator splits into the two antiprisms") {
        auto parts = decompose_slice(slices[3], stab);
        REQUIRE(parts.size() == 2);
        std::unordered_set<GoldenQuaternion> a(parts[0].begin(), parts[0].end());
        std::unordered_set<GoldenQuaternion> b(parts[1].begin(), parts[1].end());
        if (!a.count(GoldenQuaternion::e1())) std::swap(a, b);
        CHECK(a.count(GoldenQuaternion::e1()) == 1);
        CHECK(a.count(-GoldenQuaternion::e1()) == 1);
        CHECK(b.count(GoldenQuaternion::e2()) == 1);
        CHECK(b.count(-GoldenQuaternion::e2()) == 1);
        CHECK(distance_multiset(parts[0]) != distance_multiset(parts[1]));
    }

    SUBCASE("the trivial group gives singleton orbits") {
        FiniteGroup trivial = FiniteGroup::closure({}, 1);
        auto parts = decompose_slice(slices[1], trivial);
        CHECK(parts.size() == 20);
        for (const auto& p : parts) CHECK(p.size() == 1);
    }

    SUBCASE("a group moving the axis is rejected") {
        const auto& k = icosian_constants();
        FiniteGroup moving = FiniteGroup::closure({Isometry::plain(k.b, k.b)}, 10);
        CHECK_THROWS_AS(decompose_slice(slices[1], moving), AxisNotFixedError);
    }
}
