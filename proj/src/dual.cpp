#include "ga/dual.hpp"

#include <algorithm>
#include <unordered_set>

namespace ga {

namespace {

const GoldenNumber& tau() { return GoldenNumber::tau(); }

std::array<GoldenNumber, 3> edge_vec(const Point3& a, const Point3& b) {
    return {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
}

bool parallel(const std::array<GoldenNumber, 3>& a, const std::array<GoldenNumber, 3>& b) {
    return (a[1] * b[2] - a[2] * b[1]).is_zero() && (a[2] * b[0] - a[0] * b[2]).is_zero() &&
           (a[0] * b[1] - a[1] * b[0]).is_zero();
}

}  // namespace

std::vector<DualVertex> dual_vertices(const std::vector<Facet>& facets,
                                      const GrandAntiprism& ga) {
    GoldenNumber inner_scale = GoldenNumber(2) - tau();       // 1/tau^2
    GoldenNumber outer_scale{make_rational(1, 5)};            // 2/10
    GoldenNumber two{2}, tau_sq = tau() * tau();

    std::vector<DualVertex> duals;
    duals.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const Facet& f = facets[i];
        GoldenQuaternion sum = GoldenQuaternion::zero();
        for (int v : f.vertices) sum = sum + ga.vertices[v];
        DualVertex dv;
        dv.source_facet = (int)i;
        if (f.type == CellType::Tetrahedron) {
            dv.position = inner_scale * sum;
            dv.shell = Shell::Inner;
            if (dv.position.norm_sq() != two)
                throw std::logic_error("inner dual vertex off the radius-sqrt2 sphere");
        } else if (f.type == CellType::PentagonalAntiprism) {
            dv.position = outer_scale * sum;
            dv.shell = Shell::Outer;
            if (dv.position.norm_sq() != tau_sq)
                throw std::logic_error("outer dual vertex off the radius-tau sphere");
        } else {
            throw std::invalid_argument("dual_vertices: facet of unknown cell type");
        }
        duals.push_back(std::move(dv));
    }
    return duals;
}

std::size_t DualCell::count_faces(FaceClass cls) const {
    return std::count_if(faces.begin(), faces.end(),
                         [cls](const DualFace& f) { return f.cls == cls; });
}

DualCell dual_cell_of(const GoldenQuaternion& v, const std::vector<DualVertex>& duals,
                      const std::vector<Facet>& facets, const GrandAntiprism& ga) {
    int vi = ga.index_of(v);

    DualCell cell;
    cell.ga_vertex = v;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto& verts = facets[i].vertices;
        if (std::binary_search(verts.begin(), verts.end(), vi))
            cell.dual_ids.push_back((int)i);
    }
    if (cell.dual_ids.size() != 14)
        throw std::logic_error("dual cell: expected 14 incident cells, got " +
                               std::to_string(cell.dual_ids.size()));
    std::sort(cell.dual_ids.begin(), cell.dual_ids.end(), [&](int a, int b) {
        return duals[a].position.compare(duals[b].position) < 0;
    });

    GoldenNumber level = tau() * tau() * GoldenNumber(make_rational(1, 2));
    OrthonormalBasis basis = OrthonormalBasis::from_unit(v);
    for (int id : cell.dual_ids) {
        const GoldenQuaternion& p = duals[id].position;
        auto coords = coords_in_basis(p, basis);
        if (coords[0] != level)
            throw std::logic_error("dual cell: vertex off the common hyperplane");
        cell.positions.push_back(p);
        cell.coords3d.push_back({coords[1], coords[2], coords[3]});
    }

    for (const Face3& face : convex_hull_faces_3d(cell.coords3d)) {
        DualFace df;
        df.cycle = face.cycle;
        df.cls = classify_face(cell.coords3d, face.cycle);
        cell.faces.push_back(std::move(df));
    }
    return cell;
}

FaceClass classify_face(const std::vector<Point3>& pts, const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    std::vector<GoldenNumber> edge(k);
    for (std::size_t i = 0; i < k; ++i)
        edge[i] = distance_sq_3d(pts[cycle[i]], pts[cycle[(i + 1) % k]]);

    if (k == 5) {
        for (const auto& e : edge)
            if (e != edge[0]) throw UnclassifiableFaceError("pentagon with unequal edges");
        return FaceClass::Pentagon;
    }
    if (k == 4) {
        for (std::size_t r = 0; r < 4; ++r) {
            auto e = [&](std::size_t i) { return edge[(r + i) % 4]; };
            if (e(0) == e(1) && e(2) == e(3) && e(0) != e(2)) return FaceClass::Kite;
            if (e(1) == e(3) && e(0) != e(2)) {
                // Equal legs; the two remaining sides must be parallel.
                auto side_a = edge_vec(pts[cycle[r]], pts[cycle[(r + 1) % 4]]);
                auto side_b = edge_vec(pts[cycle[(r + 3) % 4]], pts[cycle[(r + 2) % 4]]);
                if (parallel(side_a, side_b)) return FaceClass::IsoscelesTrapezoid;
            }
        }
    }
    throw UnclassifiableFaceError("face is neither pentagon, kite nor trapezoid");
}

Dual120Report cross_check_120cell(const std::vector<DualVertex>& duals,
                                  const FiniteGroup& aut) {
    const auto& k = icosian_constants();
    const GoldenQuaternion one = GoldenQuaternion::one();
    const GoldenQuaternion e1 = GoldenQuaternion::e1();
    const GoldenQuaternion e2 = GoldenQuaternion::e2();
    const GoldenQuaternion e3 = GoldenQuaternion::e3();

    // sqrt2 times the three 16-point orbits of the 24-cell.
    auto signed_pairs = [](const GoldenQuaternion& a, const GoldenQuaternion& b) {
        return std::vector<GoldenQuaternion>{a + b, a - b, -a + b, -a - b};
    };
    std::vector<GoldenQuaternion> v1 = signed_pairs(one, e1), v1b = signed_pairs(e2, e3);
    v1.insert(v1.end(), v1b.begin(), v1b.end());
    std::vector<GoldenQuaternion> v2 = signed_pairs(one, e2), v2b = signed_pairs(e3, e1);
    v2.insert(v2.end(), v2b.begin(), v2b.end());
    std::vector<GoldenQuaternion> v3 = signed_pairs(one, e3), v3b = signed_pairs(e1, e2);
    v3.insert(v3.end(), v3b.begin(), v3b.end());

    std::vector<GoldenQuaternion> b_pow(10);
    b_pow[0] = one;
    for (int m = 1; m < 10; ++m) b_pow[m] = b_pow[m - 1] * k.b;

    auto double_orbit = [&](const std::vector<GoldenQuaternion>& seed) {
        std::unordered_set<GoldenQuaternion> out;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j)
                for (const auto& w : seed) out.insert(b_pow[i] * w * b_pow[j]);
        return out;
    };

    auto j1 = double_orbit(v1);
    auto j3_prime = double_orbit(signed_pairs(one, e3));
    std::unordered_set<GoldenQuaternion> j = j1;
    for (const auto& q : double_orbit(v2)) j.insert(q);
    for (const auto& q : double_orbit(v3)) j.insert(q);

    Dual120Report report;
    report.j_total = j.size();
    report.j1_size = j1.size();
    report.j3_size = j3_prime.size();

    std::unordered_set<GoldenQuaternion> inner;
    for (const auto& dv : duals)
        if (dv.shell == Shell::Inner) inner.insert(dv.position);
    std::unordered_set<GoldenQuaternion> expected = j1;
    for (const auto& q : j3_prime) expected.insert(q);
    report.inner_matches = inner == expected;

    std::vector<GoldenQuaternion> j_points(j.begin(), j.end());
    std::sort(j_points.begin(), j_points.end());
    report.j_decomposition = decompose_under(j_points, aut).sizes();
    return report;
}

std::vector<std::size_t> dual_orbit_decomposition(const std::vector<DualVertex>& duals,
                                                  const FiniteGroup& aut) {
    std::vector<GoldenQuaternion> points;
    points.reserve(duals.size());
    for (const auto& dv : duals) points.push_back(dv.position);
    std::sort(points.begin(), points.end());
    return decompose_under(points, aut).sizes();
}

}  // namespace ga
