#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/cells.hpp"
#include "ga/icosian.hpp"

#include <algorithm>
#include <unordered_set>

using namespace ga;

namespace {

GoldenNumber half() { return GoldenNumber(Rational(1, 2)); }

std::vector<GoldenQuaternion> sorted(std::vector<GoldenQuaternion> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("construction") {
    auto g = IcosianGroup::build();
    CHECK(g.size() == 120);
    CHECK(g.contains(-GoldenQuaternion::one()));
    GoldenQuaternion q20{half(), half(), half(), half()};
    CHECK(g.contains(q20));

    auto table = table1_elements();
    CHECK(table.size() == 120);
    std::unordered_set<GoldenQuaternion> distinct(table.begin(), table.end());
    CHECK(distinct.size() == 120);

    for (const auto& q : g.elements()) CHECK(q.norm_sq() == GoldenNumber(1));
}

TEST_CASE("element orders") {
    auto g = IcosianGroup::build();
    const auto& k = icosian_constants();
    CHECK(g.element_order(k.b) == 10);
    CHECK(g.element_order(-GoldenQuaternion::one()) == 2);
    CHECK(g.element_order({half(), half(), half(), half()}) == 6);
    CHECK(g.element_order(GoldenQuaternion::one()) == 1);
    CHECK(g.element_order(k.e3) == 4);
    CHECK_THROWS_AS(g.element_order(GoldenQuaternion{1, 1, 0, 0}), NotInGroupError);
}

TEST_CASE("conjugacy classes") {
    auto g = IcosianGroup::build();
    auto table = classify_conjugacy(g);
    REQUIRE(table.classes.size() == 9);

    const ConjClass* top = table.find("12(1)+");
    REQUIRE(top != nullptr);
    CHECK(top->members.size() == 12);
    CHECK(top->element_order == 10);
    CHECK(top->real_part == GoldenNumber::tau() * half());

    const ConjClass* thirty = table.find("30(1)");
    REQUIRE(thirty != nullptr);
    CHECK(thirty->members.size() == 30);
    CHECK(thirty->element_order == 4);

    const ConjClass* unit = table.find("1");
    REQUIRE(unit != nullptr);
    CHECK(unit->members.size() == 1);
    CHECK(g.elements()[unit->members[0]] == GoldenQuaternion::one());
}

TEST_CASE("named constants") {
    auto g = IcosianGroup::build();
    const auto& k = icosian_constants();
    auto top_class = g.class_of_real_part(GoldenNumber::tau() * half());
    CHECK(std::count(top_class.begin(), top_class.end(), k.b) == 1);
    CHECK(std::count(top_class.begin(), top_class.end(), k.c) == 1);
    GoldenNumber sigma_sq = GoldenNumber::sigma() * GoldenNumber::sigma();
    CHECK(distance_sq(k.b, k.c) == sigma_sq);
    CHECK(sigma_sq == GoldenNumber::sigma() + GoldenNumber(1));
    auto zero_class = g.class_of_real_part(GoldenNumber(0));
    CHECK(std::count(zero_class.begin(), zero_class.end(), k.e3) == 1);
}

TEST_CASE("icosahedron translates") {
    auto g = IcosianGroup::build();
    const auto& k = icosian_constants();

    SUBCASE("around the identity") {
        auto around_one = g.icosahedron_of(GoldenQuaternion::one());
        CHECK(around_one == sorted(g.class_of_real_part(GoldenNumber::tau() * half())));
    }

    SUBCASE("around b: the tabulated vertex list plus 1 and b^2") {
        const auto& b = k.b;
        const auto& c = k.c;
        GoldenQuaternion bc = b.conjugate();
        GoldenQuaternion cc = c.conjugate();
        std::vector<GoldenQuaternion> expected = {
            c * b,       bc * c * b * b, -(bc * bc * c * bc * bc), b * b * c * bc, b * c,
            c,           bc * c * b,     bc * bc * c * b * b,      b * b * c * bc * bc,
            b * c * bc,  GoldenQuaternion::one(), b * b,
        };
        CHECK(g.icosahedron_of(b) == sorted(expected));
    }

    SUBCASE("around c: the ten neighbours plus 1 and b") {
        auto expected = c_neighbour_list();
        expected.push_back(GoldenQuaternion::one());
        expected.push_back(k.b);
        CHECK(g.icosahedron_of(k.c) == sorted(expected));
    }

    CHECK_THROWS_AS(g.icosahedron_of(GoldenQuaternion{1, 1, 0, 0}), NotInGroupError);
}

TEST_CASE("the twelve written in terms of b and c") {
    auto g = IcosianGroup::build();
    const auto& k = icosian_constants();
    std::vector<GoldenQuaternion> twelve = {k.b, k.b.conjugate()};
    GoldenQuaternion bm = GoldenQuaternion::one();
    for (int m = 0; m < 5; ++m) {
        GoldenQuaternion bmc = bm.conjugate();
        twelve.push_back(bmc * k.c * bm);
        twelve.push_back(bmc * k.c.conjugate() * bm);
        bm = bm * k.b;
    }
    CHECK(sorted(twelve) == sorted(g.class_of_real_part(GoldenNumber::tau() * half())));
}

TEST_CASE("rewriting relations") {
    const auto& k = icosian_constants();
    const auto& b = k.b;
    const auto& c = k.c;
    const auto& e3 = k.e3;
    CHECK(b * b * c * b * b == -c.conjugate());
    CHECK(b.conjugate() * c * b == c * b * c.conjugate());
    CHECK(c.conjugate() * b * c == b * c * b.conjugate());
    CHECK(e3 * b == b.conjugate() * e3);
    CHECK(e3 * c == c.conjugate() * e3);
}

TEST_CASE("edge regularity of the 600-cell") {
    auto g = IcosianGroup::build();
    GoldenNumber sigma_sq = GoldenNumber::sigma() * GoldenNumber::sigma();
    for (const auto& q : g.elements()) {
        int nearest = 0;
        for (const auto& x : g.elements())
            if (distance_sq(x, q) == sigma_sq) ++nearest;
        CHECK(nearest == 12);
    }
}
