#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/golden.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

using namespace ga;

namespace {

GoldenNumber random_golden(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 12);
    return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("golden constants") {
    const GoldenNumber& t = GoldenNumber::tau();
    const GoldenNumber& s = GoldenNumber::sigma();
    CHECK(t * s == GoldenNumber(-1));
    CHECK(t * t == t + GoldenNumber(1));
    CHECK(s * s == s + GoldenNumber(1));
    CHECK(t + s == GoldenNumber(1));
    CHECK(t.a() == Rational(1, 2));
    CHECK(t.b() == Rational(1, 2));
    CHECK(s.b() == Rational(-1, 2));
}

TEST_CASE("arithmetic identities") {
    GoldenNumber x{make_rational(3, 7), make_rational(-2, 5)};
    CHECK(x + GoldenNumber(0) == x);
    CHECK(x - x == GoldenNumber(0));
    CHECK(GoldenNumber(1) * x == x);
}

TEST_CASE("inverse") {
    CHECK(GoldenNumber::tau().inverse() == -GoldenNumber::sigma());
    CHECK(GoldenNumber(1).inverse() == GoldenNumber(1));
    CHECK(GoldenNumber(2).inverse() == GoldenNumber(Rational(1, 2)));
    CHECK_THROWS_AS(GoldenNumber(0).inverse(), std::domain_error);

    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        GoldenNumber x = random_golden(rng);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == GoldenNumber(1));
    }
}

TEST_CASE("exact sign") {
    CHECK(GoldenNumber::sigma().sign() == -1);
    CHECK((GoldenNumber::tau() - GoldenNumber(1)).sign() == 1);
    CHECK(GoldenNumber(0).sign() == 0);
    // opposite-sign components on both sides of zero
    CHECK(GoldenNumber{Rational(9, 4), Rational(-1)}.sign() == 1);   // 9/4 - sqrt5 > 0
    CHECK(GoldenNumber{Rational(11, 5), Rational(-1)}.sign() == -1);  // 11/5 - sqrt5 < 0

    std::mt19937 rng(11);
    for (int i = 0; i < 10000; ++i) {
        GoldenNumber x = random_golden(rng);
        double v = x.to_double();
        if (std::abs(v) > 1e-6) CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("field conjugation") {
    CHECK(GoldenNumber::tau().field_conjugate() == GoldenNumber::sigma());
    CHECK(GoldenNumber(3).field_conjugate() == GoldenNumber(3));
    GoldenNumber tau_sq = GoldenNumber::tau() * GoldenNumber::tau();
    GoldenNumber sigma_sq = GoldenNumber::sigma() * GoldenNumber::sigma();
    CHECK(tau_sq.field_conjugate() == sigma_sq);

    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
        GoldenNumber x = random_golden(rng), y = random_golden(rng);
        CHECK(x.field_conjugate().field_conjugate() == x);
        CHECK((x * y).field_conjugate() == x.field_conjugate() * y.field_conjugate());
        CHECK((x + y).field_conjugate() == x.field_conjugate() + y.field_conjugate());
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(17);
    for (int i = 0; i < 300; ++i) {
        GoldenNumber x = random_golden(rng), y = random_golden(rng), z = random_golden(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("conversion to double") {
    CHECK(GoldenNumber::tau().to_double() == doctest::Approx(1.618033988749895).epsilon(1e-15));
    CHECK(GoldenNumber(0).to_double() == 0.0);
    GoldenNumber half_tau_sq = GoldenNumber::tau() * GoldenNumber::tau() *
                               GoldenNumber(Rational(1, 2));
    CHECK(half_tau_sq.to_double() == doctest::Approx(1.3090169943749475).epsilon(1e-15));
}

TEST_CASE("rational normalization") {
    Rational r = make_rational(6, -4);
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 2);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("order and hashing") {
    CHECK(GoldenNumber::sigma() < GoldenNumber(0));
    CHECK(GoldenNumber(0) < GoldenNumber::tau());
    CHECK(GoldenNumber{Rational(0), Rational(1)}.compare(GoldenNumber{Rational(2), Rational(0)}) > 0);

    std::unordered_set<GoldenNumber> set;
    set.insert(GoldenNumber::tau());
    set.insert(GoldenNumber{Rational(1, 2), Rational(1, 2)});
    CHECK(set.size() == 1);
}
