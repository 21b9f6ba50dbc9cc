#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/cells.hpp"

#include <algorithm>
#include <unordered_set>

using namespace ga;

namespace {

GoldenNumber half() { return GoldenNumber(Rational(1, 2)); }

}  // namespace

TEST_CASE("grand antiprism vertices") {
    auto ga = ga_vertices();
    auto icosians = IcosianGroup::build();
    const auto& k = icosian_constants();

    CHECK(ga.vertices.size() == 100);
    CHECK(ga.ring.size() == 100);

    std::unordered_set<GoldenQuaternion> expected(icosians.elements().begin(),
                                                  icosians.elements().end());
    for (const auto& r : h2h2_roots()) CHECK(expected.erase(r) == 1);
    std::unordered_set<GoldenQuaternion> got(ga.vertices.begin(), ga.vertices.end());
    CHECK(got == expected);

    CHECK(ga.ring_of(k.c) == Ring::R1);
    CHECK(ga.ring_of(k.e3 * k.c) == Ring::R2);
    CHECK(ga.ring_points(Ring::R1).size() == 50);
    CHECK(ga.ring_points(Ring::R2).size() == 50);
    CHECK_THROWS_AS(ga.index_of(k.b), NotInGroupError);
}

TEST_CASE("ring relations") {
    auto ga = ga_vertices();
    RingReport rep = verify_ring_relations(ga);
    CHECK(rep.sizes_ok);
    CHECK(rep.e3_left_r1);
    CHECK(rep.e3_right_r1);
    CHECK(rep.e3_left_r2);
    CHECK(rep.e3_right_r2);
    CHECK(rep.figure_membership);
    CHECK(rep.pass());
}

TEST_CASE("facet enumeration on small sets") {
    SUBCASE("inscribed 4-simplex has five tetrahedral facets") {
        // five unit icosians whose hull contains the sphere center
        GoldenNumber h = half();
        std::vector<GoldenQuaternion> simplex = {
            GoldenQuaternion::one(), {-h, h, h, h}, {-h, -h, -h, h},
            {-h, -h, h, -h},         {-h, h, -h, -h}};
        auto facets = enumerate_facets(simplex);
        REQUIRE(facets.size() == 5);
        for (const auto& f : facets) {
            CHECK(f.vertices.size() == 4);
            CHECK(f.type == CellType::Tetrahedron);
        }
    }

    SUBCASE("the 4-cube has eight cubical facets") {
        std::vector<GoldenQuaternion> cube;
        for (int mask = 0; mask < 16; ++mask) {
            GoldenNumber h = half();
            cube.push_back({mask & 1 ? h : -h, mask & 2 ? h : -h, mask & 4 ? h : -h,
                            mask & 8 ? h : -h});
        }
        auto facets = enumerate_facets(cube);
        REQUIRE(facets.size() == 8);
        for (const auto& f : facets) {
            CHECK(f.vertices.size() == 8);
            CHECK(f.type == CellType::Other);
        }
    }

    SUBCASE("error paths") {
        std::vector<GoldenQuaternion> dup = {
            GoldenQuaternion::one(), GoldenQuaternion::one(), GoldenQuaternion::e1(),
            GoldenQuaternion::e2(), GoldenQuaternion::e3()};
        CHECK_THROWS_AS(enumerate_facets(dup), std::invalid_argument);

        std::vector<GoldenQuaternion> flat = {
            GoldenQuaternion::one(),  GoldenQuaternion::e1(),  GoldenQuaternion::e2(),
            -GoldenQuaternion::one(), -GoldenQuaternion::e1(), -GoldenQuaternion::e2()};
        CHECK_THROWS_AS(enumerate_facets(flat), DegenerateInputError);

        std::vector<GoldenQuaternion> off_sphere = {
            GoldenQuaternion::one(), GoldenQuaternion::e1(), GoldenQuaternion::e2(),
            GoldenQuaternion::e3(), GoldenQuaternion{GoldenNumber(2), 0, 0, 0}};
        CHECK_THROWS_AS(enumerate_facets(off_sphere), std::invalid_argument);
    }
}

TEST_CASE("grand antiprism facets") {
    auto ga = ga_vertices();
    auto facets = enumerate_facets(ga.vertices, 2);
    REQUIRE(facets.size() == 320);

    CellCensus census = cell_census(facets, ga);
    CHECK(census.tetra_22 == 100);
    CHECK(census.tetra_31 == 100);
    CHECK(census.tetra_13 == 100);
    CHECK(census.antiprisms == 20);
    CHECK(census.per_vertex_ok);

    SUBCASE("thread count does not change the result") {
        auto facets1 = enumerate_facets(ga.vertices, 1);
        REQUIRE(facets1.size() == facets.size());
        for (std::size_t i = 0; i < facets.size(); ++i) {
            CHECK(facets1[i].vertices == facets[i].vertices);
            CHECK(facets1[i].plane == facets[i].plane);
            CHECK(facets1[i].type == facets[i].type);
        }
    }

    SUBCASE("support is strict and exact") {
        const Facet& f = facets.front();
        std::vector<bool> member(ga.vertices.size(), false);
        for (int v : f.vertices) member[v] = true;
        for (std::size_t m = 0; m < ga.vertices.size(); ++m)
            CHECK(f.plane.side_of(ga.vertices[m]) == (member[m] ? 0 : -1));
    }

    SUBCASE("tetrahedra are regular with squared edge sigma^2") {
        GoldenNumber sigma_sq = GoldenNumber::sigma() * GoldenNumber::sigma();
        for (const auto& f : facets) {
            if (f.type != CellType::Tetrahedron) continue;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    CHECK(distance_sq(ga.vertices[f.vertices[i]],
                                      ga.vertices[f.vertices[j]]) == sigma_sq);
        }
    }

    SUBCASE("antiprism centers") {
        auto centers = antiprism_centers(facets, ga);
        REQUIRE(centers.size() == 20);
        GoldenNumber th = GoldenNumber::tau() * half();
        std::vector<GoldenQuaternion> expected;
        for (const auto& r : h2h2_roots()) expected.push_back(th * r);
        std::sort(expected.begin(), expected.end());
        CHECK(centers == expected);
    }

    SUBCASE("hyperplane canonical form") {
        Hyperplane canon = facets.front().plane.canonicalized();
        int lead_sign = 0;
        for (int i = 0; i < 4 && lead_sign == 0; ++i) lead_sign = canon.normal[i].sign();
        CHECK(lead_sign == 1);
        // canonicalization preserves the locus
        for (int v : facets.front().vertices) CHECK(canon.side_of(ga.vertices[v]) == 0);
    }
}

TEST_CASE("vertex figure") {
    auto ga = ga_vertices();
    auto aut = build_aut_group();
    const auto& k = icosian_constants();

    VertexFigure fig = vertex_figure(k.c, ga, aut);
    REQUIRE(fig.neighbors.size() == 10);
    auto expected = c_neighbour_list();
    std::unordered_set<GoldenQuaternion> got(fig.neighbors.begin(), fig.neighbors.end());
    CHECK(got == std::unordered_set<GoldenQuaternion>(expected.begin(), expected.end()));

    REQUIRE(fig.stabilizer_orbits.size() == 4);
    std::vector<std::size_t> orbit_sizes;
    for (const auto& part : fig.stabilizer_orbits) orbit_sizes.push_back(part.size());
    std::sort(orbit_sizes.begin(), orbit_sizes.end());
    CHECK(orbit_sizes == std::vector<std::size_t>{2, 2, 2, 4});

    SUBCASE("every vertex has an isometric figure") {
        VertexFigure other = vertex_figure(ga.vertices[42], ga, aut);
        CHECK(other.neighbors.size() == 10);
        std::vector<GoldenQuaternion> a4(fig.neighbors), b4(other.neighbors);
        CHECK(distance_multiset(a4) == distance_multiset(b4));
    }
}

TEST_CASE("antiprism pattern recognition") {
    auto ga = ga_vertices();
    GoldenNumber th = GoldenNumber::tau() * half();
    std::vector<GoldenQuaternion> cap;
    for (const auto& q : ga.vertices)
        if (q.real() == th) cap.push_back(q);
    REQUIRE(cap.size() == 10);
    CHECK(has_pentagonal_antiprism_pattern(cap));
    CHECK(is_regular_pentagonal_antiprism(cap));

    // ten spread-out points that are no antiprism at all
    std::vector<GoldenQuaternion> junk;
    for (int i = 0; i < 100; i += 10) junk.push_back(ga.vertices[i]);
    CHECK_FALSE(has_pentagonal_antiprism_pattern(junk));
    CHECK_FALSE(is_regular_pentagonal_antiprism(junk));
}
