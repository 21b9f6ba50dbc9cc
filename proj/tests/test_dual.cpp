#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/dual.hpp"

#include <unordered_set>

using namespace ga;

namespace {

struct Fixture {
    GrandAntiprism ga = ga_vertices();
    std::vector<Facet> facets = enumerate_facets(ga.vertices, 2);
    std::vector<DualVertex> duals = dual_vertices(facets, ga);
};

Fixture& fixture() {
    static Fixture f;
    return f;
}

}  // namespace

TEST_CASE("dual vertices") {
    auto& f = fixture();
    REQUIRE(f.duals.size() == 320);
    GoldenNumber two{2};
    GoldenNumber tau_sq = GoldenNumber::tau() * GoldenNumber::tau();
    std::size_t inner = 0, outer = 0;
    for (const auto& dv : f.duals) {
        if (dv.shell == Shell::Inner) {
            CHECK(dv.position.norm_sq() == two);
            ++inner;
        } else {
            CHECK(dv.position.norm_sq() == tau_sq);
            ++outer;
        }
    }
    CHECK(inner == 300);
    CHECK(outer == 20);

    SUBCASE("outer shell is tau times the roots") {
        std::unordered_set<GoldenQuaternion> expected;
        for (const auto& r : h2h2_roots()) expected.insert(GoldenNumber::tau() * r);
        std::unordered_set<GoldenQuaternion> got;
        for (const auto& dv : f.duals)
            if (dv.shell == Shell::Outer) got.insert(dv.position);
        CHECK(got == expected);
    }

    SUBCASE("unknown cell type is rejected") {
        auto broken = f.facets;
        broken.front().type = CellType::Other;
        CHECK_THROWS_AS(dual_vertices(broken, f.ga), std::invalid_argument);
    }
}

TEST_CASE("the cell of c") {
    auto& f = fixture();
    const auto& k = icosian_constants();
    DualCell cell = dual_cell_of(k.c, f.duals, f.facets, f.ga);

    REQUIRE(cell.dual_ids.size() == 14);
    CHECK(cell.count_faces(FaceClass::Pentagon) == 4);
    CHECK(cell.count_faces(FaceClass::Kite) == 4);
    CHECK(cell.count_faces(FaceClass::IsoscelesTrapezoid) == 2);

    GoldenNumber level = GoldenNumber::tau() * GoldenNumber::tau() *
                         GoldenNumber(Rational(1, 2));
    for (const auto& p : cell.positions) CHECK(scalar_product(p, k.c) == level);

    std::unordered_set<GoldenQuaternion> members(cell.positions.begin(),
                                                 cell.positions.end());
    CHECK(members.count(GoldenNumber::tau() * GoldenQuaternion::one()) == 1);
    CHECK(members.count(GoldenNumber::tau() * k.b) == 1);

    SUBCASE("center differences are orthogonal to the vertex") {
        for (std::size_t i = 0; i < cell.positions.size(); ++i)
            for (std::size_t j = i + 1; j < cell.positions.size(); ++j)
                CHECK(scalar_product(cell.positions[i] - cell.positions[j], k.c).is_zero());
    }

    SUBCASE("the dual of the first listed tetrahedron at c") {
        // (c,q2;q6,q9) has dual vertex (tau + e1 + 2 e2 - sigma e3)/2.
        auto cn = c_neighbour_list();
        std::vector<int> want = {f.ga.index_of(k.c), f.ga.index_of(cn[1]),
                                 f.ga.index_of(cn[5]), f.ga.index_of(cn[8])};
        std::sort(want.begin(), want.end());
        const DualVertex* found = nullptr;
        for (const auto& dv : f.duals)
            if (f.facets[dv.source_facet].vertices == want) found = &dv;
        REQUIRE(found != nullptr);
        GoldenNumber h{Rational(1, 2)};
        GoldenQuaternion expected{GoldenNumber::tau() * h, h, 1,
                                  -(GoldenNumber::sigma() * h)};
        CHECK(found->position == expected);
        CHECK(scalar_product(found->position, k.c) == level);
    }
}

TEST_CASE("face classification") {
    std::vector<Point3> pts = {
        {0, 0, 0}, {2, 0, 0}, {3, 2, 0}, {-1, 2, 0},  // trapezoid 0123
    };
    CHECK(classify_face(pts, {0, 1, 2, 3}) == FaceClass::IsoscelesTrapezoid);

    std::vector<Point3> kite = {
        {0, 0, 0}, {2, 1, 0}, {5, 0, 0}, {2, -1, 0},
    };
    CHECK(classify_face(kite, {0, 1, 2, 3}) == FaceClass::Kite);

    std::vector<Point3> square = {
        {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    };
    CHECK_THROWS_AS(classify_face(square, {0, 1, 2, 3}), UnclassifiableFaceError);
}

TEST_CASE("120-cell cross check") {
    auto& f = fixture();
    auto aut = build_aut_group();
    Dual120Report rep = cross_check_120cell(f.duals, aut);
    CHECK(rep.j_total == 600);
    CHECK(rep.j1_size == 200);
    CHECK(rep.j3_size == 100);
    CHECK(rep.inner_matches);
    CHECK(rep.j_decomposition == std::vector<std::size_t>{100, 100, 200, 200});
}

TEST_CASE("dual orbit decomposition") {
    auto& f = fixture();
    auto aut = build_aut_group();
    CHECK(dual_orbit_decomposition(f.duals, aut) == std::vector<std::size_t>{20, 100, 200});
}
