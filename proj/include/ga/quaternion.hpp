#pragma once

#include "ga/golden.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

namespace ga {

/**
 * Quaternion with GoldenNumber coordinates along 1, e1, e2, e3.
 * The imaginary units satisfy ei*ej = -delta_ij + eps_ijk ek, and the
 * Euclidean scalar product is (p,q) = (conj(p)q + conj(q)p)/2, which equals
 * the coordinatewise dot product.
 */
class GoldenQuaternion {
public:
    GoldenQuaternion() = default;
    GoldenQuaternion(GoldenNumber q0, GoldenNumber q1, GoldenNumber q2, GoldenNumber q3)
        : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}
    explicit GoldenQuaternion(GoldenNumber scalar) : c_{std::move(scalar), 0, 0, 0} {}

    static const GoldenQuaternion& one();
    static const GoldenQuaternion& e1();
    static const GoldenQuaternion& e2();
    static const GoldenQuaternion& e3();
    static const GoldenQuaternion& zero();

    const GoldenNumber& operator[](std::size_t i) const { return c_[i]; }
    GoldenNumber& operator[](std::size_t i) { return c_[i]; }
    const GoldenNumber& real() const { return c_[0]; }

    GoldenQuaternion operator+(const GoldenQuaternion& o) const;
    GoldenQuaternion operator-(const GoldenQuaternion& o) const;
    GoldenQuaternion operator-() const;
    GoldenQuaternion operator*(const GoldenQuaternion& o) const;  // Hamilton product

    GoldenQuaternion conjugate() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
    GoldenNumber norm_sq() const;
    bool is_zero() const;

    /// Inverse of a nonzero quaternion: conj(q)/|q|^2.
    GoldenQuaternion inverse() const;

    GoldenQuaternion pow(int n) const;

    bool operator==(const GoldenQuaternion& o) const { return c_ == o.c_; }
    bool operator!=(const GoldenQuaternion& o) const { return !(*this == o); }

    /// Lexicographic order on (q0,q1,q2,q3) by exact value comparison.
    int compare(const GoldenQuaternion& o) const;
    bool operator<(const GoldenQuaternion& o) const { return compare(o) < 0; }

    std::string str() const;

private:
    std::array<GoldenNumber, 4> c_{};
};

GoldenQuaternion operator*(const GoldenNumber& s, const GoldenQuaternion& q);

/// Euclidean scalar product (p,q).
GoldenNumber scalar_product(const GoldenQuaternion& p, const GoldenQuaternion& q);

/// Squared Euclidean distance |p-q|^2.
GoldenNumber distance_sq(const GoldenQuaternion& p, const GoldenQuaternion& q);

std::ostream& operator<<(std::ostream& os, const GoldenQuaternion& q);

std::size_t hash_value(const GoldenQuaternion& q);

/// Four pairwise orthogonal unit quaternions.
struct OrthonormalBasis {
    std::array<GoldenQuaternion, 4> d;

    /// Basis (v, e1*v, e2*v, e3*v); orthonormal for any unit v.
    static OrthonormalBasis from_unit(const GoldenQuaternion& v);

    bool is_orthonormal() const;
};

/// Coordinates of q in an orthonormal basis, so q = sum coords[i] * d[i].
std::array<GoldenNumber, 4> coords_in_basis(const GoldenQuaternion& q,
                                            const OrthonormalBasis& basis);

}  // namespace ga

template <>
struct std::hash<ga::GoldenQuaternion> {
    std::size_t operator()(const ga::GoldenQuaternion& q) const { return ga::hash_value(q); }
};
