#pragma once

#include "ga/group.hpp"

#include <array>
#include <map>
#include <vector>

namespace ga {

/**
 * The rank-4 root system carried by the icosian group: 120 unit roots,
 * a simple system extracted with a generic linear functional, the Cartan
 * matrix 2(a_i,a_j)/(a_j,a_j) and the fundamental weights.
 */
struct RootSystemData {
    std::vector<GoldenQuaternion> roots;           // all 120
    std::vector<GoldenQuaternion> positive_roots;  // the 60 with positive functional value
    std::array<GoldenQuaternion, 4> simple_roots;  // ordered along the diagram path
    std::array<std::array<GoldenNumber, 4>, 4> cartan;
    std::array<GoldenQuaternion, 4> weights;       // (w_i, a_j) = delta_ij / 2

    std::array<Isometry, 4> simple_reflections() const;
};

/// A functional with no root in its kernel (checked at build time).
GoldenQuaternion default_root_functional();

/// Positive roots are those with (functional, r) > 0; simple roots are the
/// positive roots that are not a sum of two positive roots.  Throws
/// NonGenericFunctionalError when some root is orthogonal to the functional.
RootSystemData build_root_system(const IcosianGroup& icosians,
                                 const GoldenQuaternion& functional);

struct OrbitDecompositionLine {
    std::vector<int> subset;                       // 1-based weight indices
    std::size_t orbit_size = 0;
    std::map<std::size_t, std::size_t> decomposition;  // orbit size -> multiplicity
};

/// One line: the full reflection-group orbit of the sum of the selected
/// fundamental weights (subset_mask bits 0..3), decomposed into orbits of
/// the given subgroup.
OrbitDecompositionLine orbit_decomposition_line(const RootSystemData& rs,
                                                const FiniteGroup& subgroup, int subset_mask);

/// All 15 nonempty subsets, in subset bitmask order.
std::vector<OrbitDecompositionLine> orbit_decomposition_table(const RootSystemData& rs,
                                                              const FiniteGroup& subgroup,
                                                              int threads = 1);

}  // namespace ga
