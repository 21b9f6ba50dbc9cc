#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/cells.hpp"
#include "ga/group.hpp"

#include <random>
#include <unordered_set>

using namespace ga;

TEST_CASE("reflections") {
    const auto& k = icosian_constants();
    Isometry r1 = reflection_from_root(GoldenQuaternion::one());
    CHECK(r1 == Isometry::star(GoldenQuaternion::one(), -GoldenQuaternion::one()));
    CHECK((r1 * r1).is_identity());
    CHECK(r1.apply(GoldenQuaternion::one()) == -GoldenQuaternion::one());

    Isometry rb = reflection_from_root(k.b);
    CHECK(rb.apply(k.b) == -k.b);
    CHECK(scalar_product(k.b, k.e3) == GoldenNumber(0));
    CHECK(rb.apply(k.e3) == k.e3);

    CHECK_THROWS_AS(reflection_from_root(GoldenQuaternion{1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("isometry action") {
    const auto& k = icosian_constants();
    CHECK(Isometry::plain(k.e3, GoldenQuaternion::one()).apply(k.b) == k.e3 * k.b);
    CHECK(Isometry::plain(k.b.conjugate(), k.b).apply(k.c) == k.b.conjugate() * k.c * k.b);
    CHECK(reflection_from_root(k.b).apply(k.b) == -k.b);
}

TEST_CASE("sign canonicalization") {
    const auto& k = icosian_constants();
    CHECK(Isometry::plain(k.b, k.c) == Isometry::plain(-k.b, -k.c));
    CHECK(Isometry::star(k.e3, k.b) == Isometry::star(-k.e3, -k.b));
    CHECK_THROWS_AS(Isometry::plain(GoldenQuaternion{1, 1, 0, 0}, GoldenQuaternion::one()),
                    std::invalid_argument);
}

TEST_CASE("composition") {
    const auto& k = icosian_constants();
    const GoldenQuaternion one = GoldenQuaternion::one();
    CHECK(Isometry::plain(k.b.conjugate(), one) * Isometry::plain(one, k.b) ==
          Isometry::plain(k.b.conjugate(), k.b));
    Isometry g = Isometry::star(k.b, k.c);
    CHECK(g * Isometry() == g);
    CHECK(Isometry() * g == g);
    CHECK((g * g.inverse()).is_identity());
    CHECK((g.inverse() * g).is_identity());

    SUBCASE("pointwise verification over the icosian group") {
        auto icosians = IcosianGroup::build();
        std::vector<Isometry> sample = {
            Isometry::plain(k.b, k.c),
            Isometry::star(k.c, k.e3 * k.b),
            reflection_from_root(k.e3),
            Isometry::plain(k.e3, one),
            Isometry::star(one, one),
        };
        for (const auto& g1 : sample)
            for (const auto& g2 : sample) {
                Isometry composed = g1 * g2;
                for (const auto& x : icosians.elements())
                    CHECK(composed.apply(x) == g1.apply(g2.apply(x)));
            }
    }
}

TEST_CASE("group closure") {
    const auto& k = icosian_constants();
    const GoldenQuaternion one = GoldenQuaternion::one();
    std::vector<Isometry> eq5 = {
        reflection_from_root(k.b),
        reflection_from_root(one),
        reflection_from_root(k.e3 * k.b),
        reflection_from_root(k.e3),
    };
    auto product = FiniteGroup::closure(eq5, 100);
    CHECK(product.size() == 100);

    eq5.push_back(Isometry::plain(k.e3, one));
    auto aut = FiniteGroup::closure(eq5, 400);
    CHECK(aut.size() == 400);
    CHECK(aut == build_aut_group());

    CHECK_THROWS_AS(FiniteGroup::closure(eq5, 100), ClosureDivergedError);

    auto icosians = IcosianGroup::build();
    std::vector<Isometry> h3_gens;
    for (const auto& p : icosians.elements()) {
        h3_gens.push_back(Isometry::plain(p, p.conjugate()));
        h3_gens.push_back(Isometry::star(p, p.conjugate()));
    }
    auto w_h3 = FiniteGroup::closure(h3_gens, 120);
    CHECK(w_h3.size() == 120);
    CHECK(w_h3.fixes(one));
}

TEST_CASE("standard groups and orbits") {
    auto icosians = IcosianGroup::build();
    auto groups = build_standard_groups(icosians);
    const auto& k = icosian_constants();

    CHECK(groups.w_h2.size() == 10);
    CHECK(groups.w_h2_prime.size() == 10);
    CHECK(groups.w_h2_product.size() == 100);
    CHECK(groups.c4.size() == 4);
    CHECK(groups.aut.size() == 400);
    CHECK(groups.w_h3.size() == 120);
    CHECK(groups.w_h4.size() == 14400);

    SUBCASE("orbits of the order-400 group") {
        auto ga = ga_vertices();
        Orbit oc = orbit_of(groups.aut, k.c);
        CHECK(oc.size() == 100);
        CHECK(oc.points == ga.vertices);
        Orbit ob = orbit_of(groups.aut, k.b);
        CHECK(ob.size() == 20);
        CHECK(ob.points == h2h2_roots());
        Orbit zero = orbit_of(groups.aut, GoldenQuaternion::zero());
        CHECK(zero.size() == 1);
    }

    SUBCASE("stabilizers") {
        FiniteGroup stab_c = stabilizer_of(groups.aut, k.c);
        CHECK(stab_c.size() == 4);
        GoldenQuaternion b2c = k.b.conjugate() * k.b.conjugate();
        CHECK(stab_c == FiniteGroup::closure(
                            {reflection_from_root(k.e3), Isometry::star(b2c, -b2c)}, 4));
        for (const auto& g : stab_c.elements())
            CHECK((g * g).is_identity());

        FiniteGroup stab_1 = stabilizer_of(groups.aut, GoldenQuaternion::one());
        CHECK(stab_1.size() == 20);
        CHECK(stab_1 == build_axis_stabilizer_group());

        GoldenQuaternion generic{GoldenNumber{Rational(3), Rational(1)},
                                 GoldenNumber{Rational(-1), Rational(2)},
                                 GoldenNumber{Rational(5, 7), Rational(0)},
                                 GoldenNumber{Rational(0), Rational(1, 3)}};
        CHECK(stabilizer_of(groups.aut, generic).size() == 1);
    }

    SUBCASE("orbit-stabilizer identity") {
        for (const auto& x : {k.c, k.b, GoldenQuaternion::one(), k.e3}) {
            Orbit orbit = orbit_of(groups.aut, x);
            FiniteGroup stab = stabilizer_of(groups.aut, x);
            CHECK(orbit.size() * stab.size() == groups.aut.size());
        }
    }

    SUBCASE("decomposition of the 600-cell vertices") {
        auto decomposition = decompose_under(icosians.elements(), groups.aut);
        CHECK(decomposition.sizes() == std::vector<std::size_t>{20, 100});
    }

    SUBCASE("non-invariant point set is rejected") {
        std::vector<GoldenQuaternion> partial(icosians.elements().begin(),
                                              icosians.elements().begin() + 7);
        CHECK_THROWS_AS(decompose_under(partial, groups.aut), NotInvariantError);
    }

    SUBCASE("the extension element") {
        Isometry turn = Isometry::plain(k.e3, GoldenQuaternion::one());
        Isometry t2 = turn * turn;
        CHECK(!turn.is_identity());
        CHECK(!t2.is_identity());
        CHECK(!(t2 * turn).is_identity());
        CHECK((t2 * t2).is_identity());
        for (const auto& g : groups.w_h2_product.elements())
            CHECK(groups.w_h2_product.contains(turn * g * turn.inverse()));
    }

    SUBCASE("isometries preserve the scalar product") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<std::size_t> pick(0, groups.aut.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const Isometry& g = groups.aut.elements()[pick(rng)];
            const GoldenQuaternion& p = icosians.elements()[trial % 120];
            const GoldenQuaternion& q = icosians.elements()[(trial * 7) % 120];
            CHECK(scalar_product(g.apply(p), g.apply(q)) == scalar_product(p, q));
        }
    }
}
