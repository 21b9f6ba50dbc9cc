#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace ga {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den as a canonical rational (lowest terms, positive denominator).
Rational make_rational(const Integer& num, const Integer& den);

int sign_of(const Rational& r);

/**
 * Element of the real quadratic field Q(sqrt 5), stored as a + b*sqrt(5)
 * with canonical rationals a, b.  The representation is unique, so
 * structural equality is value equality, and the sign of any element is
 * exactly decidable.  The golden ratio constants tau = (1+sqrt5)/2 and
 * sigma = (1-sqrt5)/2 satisfy x^2 = x + 1, tau + sigma = 1, tau*sigma = -1.
 */
class GoldenNumber {
public:
    GoldenNumber() : a_(0), b_(0) {}
    GoldenNumber(int v) : a_(v), b_(0) {}  // NOLINT: implicit by design
    GoldenNumber(Rational rational_part) : a_(std::move(rational_part)), b_(0) {}
    GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static const GoldenNumber& tau();
    static const GoldenNumber& sigma();
    static const GoldenNumber& sqrt5();

    const Rational& a() const { return a_; }  // rational part
    const Rational& b() const { return b_; }  // coefficient of sqrt(5)

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    GoldenNumber operator+(const GoldenNumber& o) const { return {a_ + o.a_, b_ + o.b_}; }
    GoldenNumber operator-(const GoldenNumber& o) const { return {a_ - o.a_, b_ - o.b_}; }
    GoldenNumber operator-() const { return {-a_, -b_}; }
    GoldenNumber operator*(const GoldenNumber& o) const {
        return {a_ * o.a_ + 5 * (b_ * o.b_), a_ * o.b_ + b_ * o.a_};
    }
    GoldenNumber& operator+=(const GoldenNumber& o) { a_ += o.a_; b_ += o.b_; return *this; }
    GoldenNumber& operator-=(const GoldenNumber& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    GoldenNumber& operator*=(const GoldenNumber& o) { *this = *this * o; return *this; }

    /// Multiplicative inverse via the field norm a^2 - 5 b^2.
    /// Throws std::domain_error on zero.
    GoldenNumber inverse() const;
    GoldenNumber operator/(const GoldenNumber& o) const { return *this * o.inverse(); }

    /// Exact sign of the real value a + b*sqrt(5): -1, 0 or +1.
    int sign() const;

    /// Field automorphism sqrt(5) -> -sqrt(5); swaps tau and sigma.
    GoldenNumber field_conjugate() const { return {a_, -b_}; }

    /// Nearest double; for export only, never used in exact logic.
    double to_double() const;

    bool operator==(const GoldenNumber& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const GoldenNumber& o) const { return !(*this == o); }

    /// Total order by real value (exact).
    int compare(const GoldenNumber& o) const { return (*this - o).sign(); }
    bool operator<(const GoldenNumber& o) const { return compare(o) < 0; }
    bool operator<=(const GoldenNumber& o) const { return compare(o) <= 0; }
    bool operator>(const GoldenNumber& o) const { return compare(o) > 0; }
    bool operator>=(const GoldenNumber& o) const { return compare(o) >= 0; }

    std::string str() const;

private:
    Rational a_, b_;
};

inline GoldenNumber operator*(int s, const GoldenNumber& x) { return GoldenNumber(s) * x; }

std::ostream& operator<<(std::ostream& os, const GoldenNumber& x);

std::size_t hash_value(const GoldenNumber& x);

}  // namespace ga

template <>
struct std::hash<ga::GoldenNumber> {
    std::size_t operator()(const ga::GoldenNumber& x) const { return ga::hash_value(x); }
};
