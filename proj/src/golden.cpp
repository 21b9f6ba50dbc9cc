#include "ga/golden.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ga {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

int sign_of(const Rational& r) {
    if (r.is_zero()) return 0;
    return numerator(r) < 0 ? -1 : 1;
}

const GoldenNumber& GoldenNumber::tau() {
    static const GoldenNumber t{Rational(1, 2), Rational(1, 2)};
    return t;
}

const GoldenNumber& GoldenNumber::sigma() {
    static const GoldenNumber s{Rational(1, 2), Rational(-1, 2)};
    return s;
}

const GoldenNumber& GoldenNumber::sqrt5() {
    static const GoldenNumber r{Rational(0), Rational(1)};
    return r;
}

GoldenNumber GoldenNumber::inverse() const {
    // 1/(a + b sqrt5) = (a - b sqrt5) / (a^2 - 5 b^2); the norm vanishes
    // only at zero because sqrt5 is irrational.
    Rational norm = a_ * a_ - 5 * (b_ * b_);
    if (norm.is_zero()) throw std::domain_error("GoldenNumber::inverse: division by zero");
    return {a_ / norm, -b_ / norm};
}

int GoldenNumber::sign() const {
    int sa = sign_of(a_);
    int sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against 5 b^2 over the rationals.
    Rational a2 = a_ * a_;
    Rational b2 = 5 * (b_ * b_);
    if (a2 == b2) return 0;  // unreachable for nonzero a, b
    return a2 > b2 ? sa : sb;
}

double GoldenNumber::to_double() const {
    static const double sqrt5 = 2.23606797749978969;
    return a_.convert_to<double>() + b_.convert_to<double>() * sqrt5;
}

std::string GoldenNumber::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenNumber& x) {
    if (x.b().is_zero()) return os << x.a();
    if (!x.a().is_zero()) {
        os << x.a();
        if (sign_of(x.b()) > 0) os << "+";
    }
    return os << x.b() << "*sqrt5";
}

std::size_t hash_value(const GoldenNumber& x) {
    std::size_t seed = boost::hash<Rational>{}(x.a());
    boost::hash_combine(seed, boost::hash<Rational>{}(x.b()));
    return seed;
}

}  // namespace ga
