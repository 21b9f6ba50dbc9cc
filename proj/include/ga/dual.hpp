#pragma once

#include "ga/cells.hpp"
#include "ga/hull3d.hpp"

#include <vector>

namespace ga {

enum class Shell { Inner, Outer };

/// Vertex of the dual polytope at the global sqrt2 scale: tetrahedron
/// centers land on the sphere of squared radius 2, antiprism centers on the
/// sphere of squared radius tau^2.
struct DualVertex {
    GoldenQuaternion position;
    int source_facet = -1;
    Shell shell = Shell::Inner;
};

/// One dual vertex per facet (same order as the facet list): a tetrahedron
/// contributes its centroid times 4/tau^2, a pentagonal antiprism its
/// centroid times 2.  Throws std::invalid_argument on unclassified facets.
std::vector<DualVertex> dual_vertices(const std::vector<Facet>& facets,
                                      const GrandAntiprism& ga);

enum class FaceClass { Pentagon, Kite, IsoscelesTrapezoid };

struct DualFace {
    std::vector<int> cycle;  // local indices into DualCell::dual_ids, cyclic
    FaceClass cls;
};

/**
 * The dual cell sitting opposite one grand antiprism vertex v: the 14
 * centers of the cells meeting v.  They share the scalar product tau^2/2
 * with v, i.e. lie in a single hyperplane orthogonal to it; coords3d are
 * the remaining basis coordinates in the (v, e1 v, e2 v, e3 v) frame.
 */
struct DualCell {
    GoldenQuaternion ga_vertex;
    std::vector<int> dual_ids;          // indices into the dual vertex list
    std::vector<GoldenQuaternion> positions;  // parallel to dual_ids
    std::vector<Point3> coords3d;             // parallel to dual_ids
    std::vector<DualFace> faces;

    std::size_t count_faces(FaceClass cls) const;
};

DualCell dual_cell_of(const GoldenQuaternion& v, const std::vector<DualVertex>& duals,
                      const std::vector<Facet>& facets, const GrandAntiprism& ga);

/// Face classification by cyclic edge-length pattern: pentagon (5 equal),
/// kite (two pairs of adjacent equal edges), isosceles trapezoid (equal
/// legs, distinct parallel sides).  Throws UnclassifiableFaceError.
FaceClass classify_face(const std::vector<Point3>& pts, const std::vector<int>& cycle);

struct Dual120Report {
    std::size_t j_total = 0;   // 600 vertices of the scaled 120-cell
    std::size_t j1_size = 0;   // 200
    std::size_t j3_size = 0;   // 100
    bool inner_matches = false;  // inner dual shell = J1 union J3'
    std::vector<std::size_t> j_decomposition;  // orbit sizes {100,100,200,200}
};

/// Rebuild the (sqrt2-scaled) 120-cell vertex set from the 24-cell orbits
/// and compare its relevant pieces with the inner dual shell.
Dual120Report cross_check_120cell(const std::vector<DualVertex>& duals,
                                  const FiniteGroup& aut);

/// Orbit sizes of the 320 dual vertices under the order-400 group.
std::vector<std::size_t> dual_orbit_decomposition(const std::vector<DualVertex>& duals,
                                                  const FiniteGroup& aut);

}  // namespace ga
