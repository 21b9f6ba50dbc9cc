#pragma once

#include "ga/cells.hpp"

#include <string>
#include <vector>

namespace ga {

/// Intersection of the vertex set with one hyperplane orthogonal to `axis`.
struct Slice {
    GoldenQuaternion axis;
    GoldenNumber level;  // exact value of (axis, p) shared by all points
    std::vector<GoldenQuaternion> points;
    std::string shape_tag;
};

/// Partition of the grand antiprism vertices by their exact scalar product
/// with a unit axis, ordered by descending level.  For axis 1 the levels
/// and counts are tau/2:10, 1/2:20, -sigma/2:10, 0:20 and mirrored.
std::vector<Slice> slice_ga(const GrandAntiprism& ga, const GoldenQuaternion& axis);

/// Orbit partition of one slice under a group that fixes the axis
/// pointwise.  Throws AxisNotFixedError otherwise.
std::vector<std::vector<GoldenQuaternion>> decompose_slice(const Slice& s,
                                                           const FiniteGroup& h);

}  // namespace ga
