#pragma once

#include "ga/errors.hpp"
#include "ga/golden.hpp"

#include <array>
#include <vector>

namespace ga {

using Point3 = std::array<GoldenNumber, 3>;

/// Face of a 3D convex hull: vertex indices in convex cyclic order,
/// canonicalized to start at the smallest index with its smaller neighbour
/// second (so congruent runs produce identical output).
struct Face3 {
    std::vector<int> cycle;
};

/**
 * Faces of the convex hull of a 3D point set where every point is a hull
 * vertex, by the same exact supporting-plane search used one dimension up:
 * candidate planes from 3-point subsets, kept when all remaining points lie
 * strictly on the centroid side.  Throws DegenerateInputError when the
 * points do not span 3D, UnclassifiableFaceError if a face has a point
 * that is not a corner of its polygon.
 */
std::vector<Face3> convex_hull_faces_3d(const std::vector<Point3>& pts);

GoldenNumber distance_sq_3d(const Point3& a, const Point3& b);

}  // namespace ga
