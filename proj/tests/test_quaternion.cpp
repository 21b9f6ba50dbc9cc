#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/cells.hpp"
#include "ga/icosian.hpp"
#include "ga/quaternion.hpp"

#include <random>

using namespace ga;

namespace {

GoldenQuaternion random_quat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 5);
    auto c = [&] { return GoldenNumber{make_rational(num(rng), den(rng)),
                                       make_rational(num(rng), den(rng))}; };
    return {c(), c(), c(), c()};
}

}  // namespace

TEST_CASE("imaginary unit relations") {
    const auto& e1 = GoldenQuaternion::e1();
    const auto& e2 = GoldenQuaternion::e2();
    const auto& e3 = GoldenQuaternion::e3();
    CHECK(e1 * e2 == e3);
    CHECK(e2 * e3 == e1);
    CHECK(e3 * e1 == e2);
    CHECK(e2 * e1 == -e3);
    CHECK(e1 * e1 == -GoldenQuaternion::one());
    CHECK(e2 * e2 == -GoldenQuaternion::one());
    CHECK(e3 * e3 == -GoldenQuaternion::one());
}

TEST_CASE("powers and generator relations") {
    const auto& k = icosian_constants();
    CHECK(k.b.pow(5) == -GoldenQuaternion::one());
    CHECK(k.b.pow(10) == GoldenQuaternion::one());
    CHECK(k.e3 * k.b == k.b.conjugate() * k.e3);
    CHECK(k.e3 * k.c == k.c.conjugate() * k.e3);
    // e3 b = (-e1 + sigma e2 + tau e3)/2
    GoldenNumber h{Rational(1, 2)};
    GoldenQuaternion expected{0, -h, GoldenNumber::sigma() * h, GoldenNumber::tau() * h};
    CHECK(k.e3 * k.b == expected);
}

TEST_CASE("conjugation") {
    const auto& k = icosian_constants();
    GoldenNumber h{Rational(1, 2)};
    CHECK(k.b.conjugate() ==
          GoldenQuaternion{GoldenNumber::tau() * h, -(GoldenNumber::sigma() * h), -h, 0});
    CHECK(GoldenQuaternion::one().conjugate() == GoldenQuaternion::one());

    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        GoldenQuaternion p = random_quat(rng), q = random_quat(rng);
        CHECK((p * q).conjugate() == q.conjugate() * p.conjugate());
        CHECK(p.conjugate().conjugate() == p);
    }
}

TEST_CASE("scalar product") {
    const auto& k = icosian_constants();
    CHECK(scalar_product(GoldenQuaternion::one(), GoldenQuaternion::e1()) == GoldenNumber(0));
    CHECK(scalar_product(k.b, k.b) == GoldenNumber(1));
    GoldenNumber half_tau = GoldenNumber::tau() * GoldenNumber(Rational(1, 2));
    CHECK(scalar_product(k.b, k.c) == half_tau);
    GoldenNumber sigma_sq = GoldenNumber::sigma() * GoldenNumber::sigma();
    CHECK(distance_sq(k.b, k.c) == sigma_sq);

    std::mt19937 rng(9);
    for (int i = 0; i < 100; ++i) {
        GoldenQuaternion p = random_quat(rng), q = random_quat(rng);
        CHECK(scalar_product(p, q) == scalar_product(q, p));
        CHECK(scalar_product(p, p) == p.norm_sq());
        CHECK((p * q).norm_sq() == p.norm_sq() * q.norm_sq());
    }
}

TEST_CASE("norm positivity") {
    std::mt19937 rng(21);
    for (int i = 0; i < 200; ++i) {
        GoldenQuaternion p = random_quat(rng);
        CHECK(p.norm_sq().sign() == (p.is_zero() ? 0 : 1));
    }
    CHECK_THROWS_AS(GoldenQuaternion::zero().inverse(), std::domain_error);
}

TEST_CASE("orthonormal basis built on c") {
    const auto& k = icosian_constants();
    OrthonormalBasis basis = OrthonormalBasis::from_unit(k.c);
    CHECK(basis.is_orthonormal());
    GoldenNumber h{Rational(1, 2)};
    // d1 = (sigma + tau e1 + e3)/2, d2 = (-1 + tau e2 + sigma e3)/2,
    // d3 = (-e1 - sigma e2 + tau e3)/2
    CHECK(basis.d[1] == GoldenQuaternion{GoldenNumber::sigma() * h, GoldenNumber::tau() * h, 0, h});
    CHECK(basis.d[2] == GoldenQuaternion{-h, 0, GoldenNumber::tau() * h,
                                         GoldenNumber::sigma() * h});
    CHECK(basis.d[3] == GoldenQuaternion{0, -h, -(GoldenNumber::sigma() * h),
                                         GoldenNumber::tau() * h});

    SUBCASE("coordinates reconstruct the quaternion") {
        std::mt19937 rng(33);
        for (int i = 0; i < 50; ++i) {
            GoldenQuaternion q = random_quat(rng);
            auto coords = coords_in_basis(q, basis);
            GoldenQuaternion rebuilt = coords[0] * basis.d[0] + coords[1] * basis.d[1] +
                                       coords[2] * basis.d[2] + coords[3] * basis.d[3];
            CHECK(rebuilt == q);
        }
    }

    SUBCASE("c has coordinates (1,0,0,0)") {
        auto coords = coords_in_basis(k.c, basis);
        CHECK(coords[0] == GoldenNumber(1));
        CHECK(coords[1] == GoldenNumber(0));
        CHECK(coords[2] == GoldenNumber(0));
        CHECK(coords[3] == GoldenNumber(0));
    }

    SUBCASE("the ten c-neighbours have first coordinate tau/2") {
        GoldenNumber half_tau = GoldenNumber::tau() * h;
        for (const auto& q : c_neighbour_list())
            CHECK(coords_in_basis(q, basis)[0] == half_tau);
    }

    SUBCASE("dropped and doubled coordinates of q9 and q10") {
        auto cn = c_neighbour_list();
        auto c9 = coords_in_basis(cn[8], basis);
        CHECK(2 * c9[1] == GoldenNumber(1));
        CHECK(2 * c9[2] == GoldenNumber(0));
        CHECK(2 * c9[3] == -GoldenNumber::sigma());
        auto c10 = coords_in_basis(cn[9], basis);
        CHECK(2 * c10[1] == GoldenNumber::sigma());
        CHECK(2 * c10[2] == GoldenNumber(1));
        CHECK(2 * c10[3] == GoldenNumber(0));
    }
}

TEST_CASE("unit multiplication is an isometry") {
    auto icosians = IcosianGroup::build();
    const auto& k = icosian_constants();
    const auto& elems = icosians.elements();
    for (std::size_t i = 0; i < 20; ++i) {
        for (std::size_t j = i; j < 20; ++j) {
            GoldenNumber before = scalar_product(elems[i], elems[j]);
            CHECK(scalar_product(k.b * elems[i], k.b * elems[j]) == before);
            CHECK(scalar_product(elems[i] * k.c, elems[j] * k.c) == before);
        }
    }
}
