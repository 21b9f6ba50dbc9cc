#pragma once

#include "ga/errors.hpp"
#include "ga/icosian.hpp"
#include "ga/isometry.hpp"

#include <cstddef>
#include <unordered_set>
#include <vector>

namespace ga {

/**
 * A finite group of pair-action isometries, stored as the full (canonically
 * sorted) element list plus the generators it was built from.  Closed under
 * composition, contains the identity and all inverses.
 */
class FiniteGroup {
public:
    /// Smallest closed set containing the generators and the identity.
    /// Throws ClosureDivergedError when more than `cap` elements appear.
    static FiniteGroup closure(std::vector<Isometry> generators, std::size_t cap);

    /// Wrap an explicit element list (deduplicated, sorted).  When no
    /// generator list is supplied the elements themselves serve as one.
    static FiniteGroup from_elements(std::vector<Isometry> elements,
                                     std::vector<Isometry> generators = {});

    std::size_t size() const { return elements_.size(); }
    const std::vector<Isometry>& elements() const { return elements_; }
    const std::vector<Isometry>& generators() const { return generators_; }

    bool contains(const Isometry& g) const { return set_.count(g) != 0; }

    /// True when every element fixes x pointwise.
    bool fixes(const GoldenQuaternion& x) const;

    bool operator==(const FiniteGroup& o) const { return elements_ == o.elements_; }

private:
    std::vector<Isometry> elements_;
    std::vector<Isometry> generators_;
    std::unordered_set<Isometry> set_;
};

struct Orbit {
    GoldenQuaternion seed;
    std::vector<GoldenQuaternion> points;  // sorted canonical

    std::size_t size() const { return points.size(); }
    bool contains(const GoldenQuaternion& q) const;
};

/// Full orbit of x, computed by breadth-first application of the group's
/// generators.
Orbit orbit_of(const FiniteGroup& g, const GoldenQuaternion& x);

/// Subgroup of g fixing x pointwise.
FiniteGroup stabilizer_of(const FiniteGroup& g, const GoldenQuaternion& x);

/// Partition of an h-invariant point set into h-orbits.  Parts and their
/// contents are canonically sorted; sizes() is the sorted multiset of part
/// sizes.  Throws NotInvariantError if some image leaves the set.
struct SetPartition {
    std::vector<std::vector<GoldenQuaternion>> parts;

    std::vector<std::size_t> sizes() const;
};

SetPartition decompose_under(const std::vector<GoldenQuaternion>& points, const FiniteGroup& h);

/// The named groups of the construction, with their orders:
///   W(H2) = 10, W(H2') = 10, their product = 100, C4 = 4,
///   Aut(H2+H2') = 400, W(H3) = 120, W(H4) = 14400.
struct StandardGroups {
    FiniteGroup w_h2;
    FiniteGroup w_h2_prime;
    FiniteGroup w_h2_product;   // W(H2) x W(H2')
    FiniteGroup c4;
    FiniteGroup aut;            // Aut(H2 + H2'), the grand antiprism symmetry
    FiniteGroup w_h3;
    FiniteGroup w_h4;
};

StandardGroups build_standard_groups(const IcosianGroup& icosians);

/// The order-400 group alone (cheap; skips the 14400-element closure).
FiniteGroup build_aut_group();

/// Point stabilizer of the quaternion 1 inside Aut(H2+H2'), order 20,
/// generated by {[1,1]*, [b~,b], [e3,-e3]*}.
FiniteGroup build_axis_stabilizer_group();

}  // namespace ga
