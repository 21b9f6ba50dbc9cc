#pragma once

#include "ga/quaternion.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace ga {

enum class IsometryKind { Plain, Star };

/**
 * Pair-action isometry of quaternion 4-space:
 *   plain [p,q] : x -> p x q
 *   star  [p,q]*: x -> p conj(x) q
 * with unit left/right factors.  [p,q] and [-p,-q] act identically, so the
 * constructor fixes the sign: the first nonzero coordinate of the left
 * factor is made positive.  Both kinds preserve the scalar product.
 */
class Isometry {
public:
    /// Identity [1,1].
    Isometry();

    static Isometry plain(const GoldenQuaternion& left, const GoldenQuaternion& right) {
        return Isometry(IsometryKind::Plain, left, right);
    }
    static Isometry star(const GoldenQuaternion& left, const GoldenQuaternion& right) {
        return Isometry(IsometryKind::Star, left, right);
    }

    IsometryKind kind() const { return kind_; }
    const GoldenQuaternion& left() const { return left_; }
    const GoldenQuaternion& right() const { return right_; }

    GoldenQuaternion apply(const GoldenQuaternion& x) const;

    /// Composition: (g * h)(x) = g(h(x)).
    Isometry operator*(const Isometry& h) const;

    Isometry inverse() const;

    bool is_identity() const;

    bool operator==(const Isometry& o) const {
        return kind_ == o.kind_ && left_ == o.left_ && right_ == o.right_;
    }
    bool operator!=(const Isometry& o) const { return !(*this == o); }

    int compare(const Isometry& o) const;
    bool operator<(const Isometry& o) const { return compare(o) < 0; }

    std::string str() const;

private:
    Isometry(IsometryKind kind, GoldenQuaternion left, GoldenQuaternion right);

    IsometryKind kind_;
    GoldenQuaternion left_, right_;
};

/// The reflection [r,-r]* through the hyperplane orthogonal to the unit
/// root r.  Throws std::invalid_argument if r is not a unit quaternion.
Isometry reflection_from_root(const GoldenQuaternion& r);

std::ostream& operator<<(std::ostream& os, const Isometry& g);

std::size_t hash_value(const Isometry& g);

}  // namespace ga

template <>
struct std::hash<ga::Isometry> {
    std::size_t operator()(const ga::Isometry& g) const { return ga::hash_value(g); }
};
