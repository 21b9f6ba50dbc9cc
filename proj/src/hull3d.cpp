#include "ga/hull3d.hpp"

#include <algorithm>
#include <map>

namespace ga {

namespace {

using Vec3 = std::array<GoldenNumber, 3>;

Vec3 sub(const Point3& a, const Point3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

GoldenNumber dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

// Projective, unoriented plane key: all four components divided by the
// first nonzero one, serialized as canonical rationals.
std::vector<Integer> plane_key(const Vec3& n, const GoldenNumber& d) {
    std::array<GoldenNumber, 4> comp{n[0], n[1], n[2], d};
    const GoldenNumber* pivot = nullptr;
    for (const auto& c : comp)
        if (!c.is_zero()) {
            pivot = &c;
            break;
        }
    GoldenNumber inv = pivot->inverse();
    std::vector<Integer> key;
    key.reserve(16);
    for (const auto& c : comp) {
        GoldenNumber r = c * inv;
        key.push_back(numerator(r.a()));
        key.push_back(denominator(r.a()));
        key.push_back(numerator(r.b()));
        key.push_back(denominator(r.b()));
    }
    return key;
}

int rank3(const std::vector<Point3>& pts) {
    std::vector<Vec3> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
    int rank = 0;
    for (int col = 0; col < 3 && rank < (int)rows.size(); ++col) {
        int pivot = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        GoldenNumber inv = rows[rank][col].inverse();
        for (int j = col; j < 3; ++j) rows[rank][j] *= inv;
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            GoldenNumber f = rows[r][col];
            for (int j = col; j < 3; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Convex cyclic order of coplanar points (all corners), by gift wrapping
// with exact orientation tests.
std::vector<int> polygon_cycle(const std::vector<Point3>& pts, const std::vector<int>& members,
                               const Vec3& normal) {
    auto orient = [&](int a, int b, int x) {
        Vec3 ab = sub(pts[b], pts[a]);
        Vec3 ax = sub(pts[x], pts[a]);
        return dot(cross(ab, ax), normal).sign();
    };

    int start = members[0];
    for (int m : members) {
        Point3 cand = pts[m];
        Point3 best = pts[start];
        if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(),
                                         [](const GoldenNumber& a, const GoldenNumber& b) {
                                             return a < b;
                                         }))
            start = m;
    }

    std::vector<int> cycle{start};
    int current = start;
    while (true) {
        int next = -1;
        for (int cand : members) {
            if (cand == current) continue;
            if (next < 0) {
                next = cand;
                continue;
            }
            int o = orient(current, next, cand);
            if (o < 0) {
                next = cand;
            } else if (o == 0) {
                // Collinear ahead: keep the farther point so edge-interior
                // points are skipped.
                Vec3 dn = sub(pts[next], pts[current]);
                Vec3 dc = sub(pts[cand], pts[current]);
                if ((dot(dc, dc) - dot(dn, dn)).sign() > 0) next = cand;
            }
        }
        if (next == start) break;
        cycle.push_back(next);
        current = next;
        if (cycle.size() > members.size())
            throw UnclassifiableFaceError("polygon walk does not close");
    }
    if (cycle.size() != members.size())
        throw UnclassifiableFaceError("face has a point that is not a polygon corner");

    // Canonical form: smallest index first, smaller neighbour second.
    auto at = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), at, cycle.end());
    if (cycle.size() > 2 && cycle[1] > cycle.back()) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

}  // namespace

GoldenNumber distance_sq_3d(const Point3& a, const Point3& b) {
    Vec3 d = sub(a, b);
    return dot(d, d);
}

std::vector<Face3> convex_hull_faces_3d(const std::vector<Point3>& pts) {
    const int n = (int)pts.size();
    if (n < 4) throw DegenerateInputError("convex_hull_faces_3d: need at least 4 points");
    if (rank3(pts) < 3) throw DegenerateInputError("convex_hull_faces_3d: points do not span 3D");

    GoldenNumber inv_n{make_rational(1, n)};
    Point3 centroid{0, 0, 0};
    for (const auto& p : pts)
        for (int i = 0; i < 3; ++i) centroid[i] += p[i];
    for (int i = 0; i < 3; ++i) centroid[i] *= inv_n;

    std::map<std::vector<Integer>, std::pair<Vec3, GoldenNumber>> planes;
    for (int i = 0; i < n - 2; ++i) {
        for (int j = i + 1; j < n - 1; ++j) {
            Vec3 d1 = sub(pts[j], pts[i]);
            for (int k = j + 1; k < n; ++k) {
                Vec3 nrm = cross(d1, sub(pts[k], pts[i]));
                if (is_zero(nrm)) continue;
                GoldenNumber d = dot(nrm, {pts[i][0], pts[i][1], pts[i][2]});
                int side_centroid = (dot(nrm, centroid) - d).sign();
                if (side_centroid == 0) continue;
                if (side_centroid > 0) {
                    nrm = {-nrm[0], -nrm[1], -nrm[2]};
                    d = -d;
                }
                bool supporting = true;
                for (int m = 0; m < n && supporting; ++m)
                    if ((dot(nrm, {pts[m][0], pts[m][1], pts[m][2]}) - d).sign() > 0)
                        supporting = false;
                if (supporting) planes.emplace(plane_key(nrm, d), std::make_pair(nrm, d));
            }
        }
    }

    std::vector<Face3> faces;
    for (const auto& [key, plane] : planes) {
        const auto& [nrm, d] = plane;
        std::vector<int> members;
        for (int m = 0; m < n; ++m)
            if (dot(nrm, {pts[m][0], pts[m][1], pts[m][2]}) == d) members.push_back(m);
        Face3 face;
        face.cycle = polygon_cycle(pts, members, nrm);
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face3& a, const Face3& b) { return a.cycle < b.cycle; });
    return faces;
}

}  // namespace ga
