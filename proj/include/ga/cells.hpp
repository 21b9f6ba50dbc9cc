#pragma once

#include "ga/errors.hpp"
#include "ga/group.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace ga {

/**
 * Supporting hyperplane (normal, x) = offset.  The normal is not
 * normalized; canonicalized() returns the content-reduced representative
 * whose first nonzero normal coordinate is positive.  Facet planes keep the
 * support orientation instead: members satisfy the equation, every other
 * point of the set has side_of() == -1.
 */
struct Hyperplane {
    GoldenQuaternion normal;
    GoldenNumber offset;

    int side_of(const GoldenQuaternion& x) const {
        return (scalar_product(normal, x) - offset).sign();
    }

    Hyperplane canonicalized() const;

    bool operator==(const Hyperplane& o) const {
        return normal == o.normal && offset == o.offset;
    }
};

enum class CellType { Tetrahedron, PentagonalAntiprism, Other };

struct Facet {
    std::vector<int> vertices;  // sorted indices into the input point set
    Hyperplane plane;           // support-oriented
    CellType type = CellType::Other;
};

/**
 * Exact facet enumeration for a 4D point set on a common sphere about the
 * origin: every maximal coplanar subset whose hyperplane has all remaining
 * points strictly on the origin side, found by brute force over 4-point
 * subsets with exact integer arithmetic.  Deterministic for any thread
 * count.  Throws DegenerateInputError if the points do not span 4D.
 */
std::vector<Facet> enumerate_facets(const std::vector<GoldenQuaternion>& points,
                                    int threads = 1);

/// Min-distance graph of 10 points matches the pentagonal antiprism
/// (two 5-cycles joined by an alternating band).
bool has_pentagonal_antiprism_pattern(const std::vector<GoldenQuaternion>& pts);

/// Antiprism pattern with all edges equal and both pentagons regular.
bool is_regular_pentagonal_antiprism(const std::vector<GoldenQuaternion>& pts);

/// Sorted multiset of the squared pairwise distances.
std::vector<GoldenNumber> distance_multiset(const std::vector<GoldenQuaternion>& pts);

enum class Ring { R1, R2 };

/// The 100 grand antiprism vertices with their ring labels: R1 holds the
/// products b^m c b^n, R2 the products b^m e3 c b^n.
struct GrandAntiprism {
    std::vector<GoldenQuaternion> vertices;  // canonical order
    std::vector<Ring> ring;                  // parallel to vertices

    bool contains(const GoldenQuaternion& q) const { return index_.count(q) != 0; }
    int index_of(const GoldenQuaternion& q) const;
    Ring ring_of(const GoldenQuaternion& q) const { return ring[index_of(q)]; }
    std::vector<GoldenQuaternion> ring_points(Ring r) const;

    std::unordered_map<GoldenQuaternion, int> index_;
};

GrandAntiprism ga_vertices();

/// The 20 quaternions {b^m, e3 b^m}: the vertex set removed from the
/// 600-cell, and the root system of the order-400 symmetry group.
std::vector<GoldenQuaternion> h2h2_roots();

struct RingReport {
    bool sizes_ok = false;        // |R1| = |R2| = 50
    bool e3_left_r1 = false;      // e3 R1 = R2
    bool e3_right_r1 = false;     // R1 e3 = R2
    bool e3_left_r2 = false;      // e3 R2 = R1
    bool e3_right_r2 = false;     // R2 e3 = R1
    bool figure_membership = false;  // ring labels of the ten c-neighbours

    bool pass() const {
        return sizes_ok && e3_left_r1 && e3_right_r1 && e3_left_r2 && e3_right_r2 &&
               figure_membership;
    }
};

RingReport verify_ring_relations(const GrandAntiprism& ga);

/// The ten quaternions of the vertex figure of c, in the fixed reference
/// order used by the ring-membership and stabilizer-orbit checks.
std::vector<GoldenQuaternion> c_neighbour_list();

/// Centroids of the 20 pentagonal antiprism cells; equals
/// {tau/2 b^m, tau/2 e3 b^m} as a set.
std::vector<GoldenQuaternion> antiprism_centers(const std::vector<Facet>& facets,
                                                const GrandAntiprism& ga);

struct CellCensus {
    std::size_t tetra_22 = 0;  // two vertices on each ring
    std::size_t tetra_31 = 0;  // three on R1, one on R2
    std::size_t tetra_13 = 0;  // one on R1, three on R2
    std::size_t antiprisms = 0;
    std::vector<std::pair<int, int>> per_vertex;  // (tetrahedra, antiprisms) incident
    bool per_vertex_ok = false;                   // every vertex sees (12, 2)
};

/// Classify the GA facets by ring signature and vertex incidence.
/// Throws CensusMismatchError when the totals are off.
CellCensus cell_census(const std::vector<Facet>& facets, const GrandAntiprism& ga);

struct VertexFigure {
    GoldenQuaternion vertex;
    std::vector<GoldenQuaternion> neighbors;  // the 10 nearest, canonical order
    OrthonormalBasis basis;                   // (v, e1 v, e2 v, e3 v)
    /// Last three basis coordinates, doubled: the dissected-icosahedron
    /// vertex coordinates.  First coordinate tau/2 is checked and dropped.
    std::vector<std::array<GoldenNumber, 3>> coords;
    std::vector<std::vector<int>> stabilizer_orbits;  // indices into neighbors
};

VertexFigure vertex_figure(const GoldenQuaternion& v, const GrandAntiprism& ga,
                           const FiniteGroup& aut);

}  // namespace ga
