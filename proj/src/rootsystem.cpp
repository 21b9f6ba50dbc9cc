#include "ga/rootsystem.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace ga {

namespace {

/// Solve the 4x4 golden-field system A x = rhs by Gaussian elimination.
std::array<GoldenNumber, 4> solve4(std::array<std::array<GoldenNumber, 4>, 4> a,
                                   std::array<GoldenNumber, 4> rhs) {
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::logic_error("solve4: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        GoldenNumber inv = a[col][col].inverse();
        for (int j = col; j < 4; ++j) a[col][j] *= inv;
        rhs[col] *= inv;
        for (int row = 0; row < 4; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            GoldenNumber f = a[row][col];
            for (int j = col; j < 4; ++j) a[row][j] -= f * a[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    return rhs;
}

Orbit reflection_orbit(const std::array<Isometry, 4>& refs, const GoldenQuaternion& seed) {
    std::unordered_set<GoldenQuaternion> seen{seed};
    std::queue<GoldenQuaternion> todo;
    todo.push(seed);
    while (!todo.empty()) {
        GoldenQuaternion cur = todo.front();
        todo.pop();
        for (const auto& r : refs) {
            GoldenQuaternion next = r.apply(cur);
            if (seen.insert(next).second) todo.push(next);
        }
    }
    Orbit orbit;
    orbit.seed = seed;
    orbit.points.assign(seen.begin(), seen.end());
    std::sort(orbit.points.begin(), orbit.points.end());
    return orbit;
}

}  // namespace

std::array<Isometry, 4> RootSystemData::simple_reflections() const {
    return {reflection_from_root(simple_roots[0]), reflection_from_root(simple_roots[1]),
            reflection_from_root(simple_roots[2]), reflection_from_root(simple_roots[3])};
}

GoldenQuaternion default_root_functional() {
    // Generic against all 120 roots; validated by build_root_system.
    return {GoldenNumber(8), GoldenNumber(4) + GoldenNumber::tau(), GoldenNumber(2),
            GoldenNumber(1) + GoldenNumber::tau()};
}

RootSystemData build_root_system(const IcosianGroup& icosians,
                                 const GoldenQuaternion& functional) {
    RootSystemData rs;
    rs.roots = icosians.elements();

    for (const auto& r : rs.roots) {
        int s = scalar_product(functional, r).sign();
        if (s == 0)
            throw NonGenericFunctionalError("functional vanishes on root " + r.str());
        if (s > 0) rs.positive_roots.push_back(r);
    }

    // A positive root is simple exactly when its reflection permutes the
    // remaining positive roots (sends only the root itself negative).
    std::unordered_set<GoldenQuaternion> positive(rs.positive_roots.begin(),
                                                  rs.positive_roots.end());
    std::vector<GoldenQuaternion> simple;
    for (const auto& r : rs.positive_roots) {
        Isometry refl = reflection_from_root(r);
        bool is_simple = true;
        for (const auto& s : rs.positive_roots) {
            if (s == r) continue;
            if (!positive.count(refl.apply(s))) {
                is_simple = false;
                break;
            }
        }
        if (is_simple) simple.push_back(r);
    }
    if (simple.size() != 4)
        throw std::logic_error("expected 4 simple roots, found " +
                               std::to_string(simple.size()));

    // Order the simple roots along the diagram path, the bond with
    // 2(a_i,a_j) = -tau first.  Adjacency: nonzero scalar product.
    auto bond = [&](int i, int j) { return 2 * scalar_product(simple[i], simple[j]); };
    std::array<int, 4> degree{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && !bond(i, j).is_zero()) ++degree[i];

    int start = -1;
    for (int i = 0; i < 4; ++i) {
        if (degree[i] != 1) continue;
        for (int j = 0; j < 4; ++j)
            if (j != i && bond(i, j) == -GoldenNumber::tau()) start = i;
    }
    if (start < 0) throw std::logic_error("simple roots do not form an H4 diagram path");

    std::array<int, 4> order{start, -1, -1, -1};
    std::array<bool, 4> used{};
    used[start] = true;
    for (int k = 1; k < 4; ++k) {
        for (int j = 0; j < 4; ++j) {
            if (!used[j] && !bond(order[k - 1], j).is_zero()) {
                order[k] = j;
                used[j] = true;
                break;
            }
        }
        if (order[k] < 0) throw std::logic_error("simple roots do not form a path");
    }
    for (int k = 0; k < 4; ++k) rs.simple_roots[k] = simple[order[k]];

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rs.cartan[i][j] = 2 * scalar_product(rs.simple_roots[i], rs.simple_roots[j]);

    // Fundamental weights solve (w_i, a_j) = delta_ij / 2 (unit roots).
    std::array<std::array<GoldenNumber, 4>, 4> a;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) a[j][k] = rs.simple_roots[j][k];
    for (int i = 0; i < 4; ++i) {
        std::array<GoldenNumber, 4> rhs{0, 0, 0, 0};
        rhs[i] = GoldenNumber(Rational(1, 2));
        auto x = solve4(a, rhs);
        rs.weights[i] = {x[0], x[1], x[2], x[3]};
    }
    return rs;
}

OrbitDecompositionLine orbit_decomposition_line(const RootSystemData& rs,
                                                const FiniteGroup& subgroup, int subset_mask) {
    OrbitDecompositionLine line;
    GoldenQuaternion seed = GoldenQuaternion::zero();
    for (int i = 0; i < 4; ++i) {
        if (subset_mask & (1 << i)) {
            line.subset.push_back(i + 1);
            seed = seed + rs.weights[i];
        }
    }
    Orbit orbit = reflection_orbit(rs.simple_reflections(), seed);
    line.orbit_size = orbit.size();
    for (std::size_t n : decompose_under(orbit.points, subgroup).sizes())
        ++line.decomposition[n];
    return line;
}

std::vector<OrbitDecompositionLine> orbit_decomposition_table(const RootSystemData& rs,
                                                              const FiniteGroup& subgroup,
                                                              int threads) {
    std::vector<OrbitDecompositionLine> lines(15);
    if (threads <= 1) {
        for (int mask = 1; mask <= 15; ++mask)
            lines[mask - 1] = orbit_decomposition_line(rs, subgroup, mask);
        return lines;
    }
    std::vector<std::future<void>> running;
    std::atomic<int> next_mask{1};
    for (int t = 0; t < std::min(threads, 15); ++t) {
        running.push_back(std::async(std::launch::async, [&] {
            for (int mask = next_mask.fetch_add(1); mask <= 15; mask = next_mask.fetch_add(1))
                lines[mask - 1] = orbit_decomposition_line(rs, subgroup, mask);
        }));
    }
    for (auto& f : running) f.get();
    return lines;
}

}  // namespace ga
