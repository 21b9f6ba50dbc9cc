#include "ga/slice.hpp"

#include "ga/hull3d.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ga {

namespace {

// Loose descriptive tag; the exact properties are what tests assert.
std::string tag_for(const std::vector<GoldenQuaternion>& pts, const OrthonormalBasis& basis) {
    std::ostringstream os;
    if (pts.size() == 10 && is_regular_pentagonal_antiprism(pts))
        return "regular pentagonal antiprism";
    if (pts.size() >= 4) {
        std::vector<Point3> flat;
        for (const auto& q : pts) {
            auto coords = coords_in_basis(q, basis);
            flat.push_back({coords[1], coords[2], coords[3]});
        }
        try {
            std::map<std::size_t, int> census;
            for (const auto& f : convex_hull_faces_3d(flat)) ++census[f.cycle.size()];
            if (pts.size() == 10 && census == std::map<std::size_t, int>{{3, 10}, {5, 2}})
                return "pentagonal antiprism";
            if (pts.size() == 20 && census == std::map<std::size_t, int>{{5, 12}})
                return "dodecahedron";
            os << pts.size() << "-point section (faces:";
            for (auto [size, count] : census) os << " " << count << "x" << size;
            os << ")";
            return os.str();
        } catch (const DegenerateInputError&) {
            // fall through to the plain tag
        }
    }
    os << pts.size() << "-point section";
    return os.str();
}

}  // namespace

std::vector<Slice> slice_ga(const GrandAntiprism& ga, const GoldenQuaternion& axis) {
    if (axis.norm_sq() != GoldenNumber(1))
        throw std::invalid_argument("slice_ga: axis must be a unit quaternion");

    std::map<GoldenNumber, std::vector<GoldenQuaternion>, std::greater<GoldenNumber>> levels;
    for (const auto& p : ga.vertices) levels[scalar_product(axis, p)].push_back(p);

    OrthonormalBasis basis = OrthonormalBasis::from_unit(axis);
    std::vector<Slice> out;
    out.reserve(levels.size());
    for (auto& [level, points] : levels) {
        Slice s;
        s.axis = axis;
        s.level = level;
        std::sort(points.begin(), points.end());
        s.points = std::move(points);
        s.shape_tag = tag_for(s.points, basis);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<GoldenQuaternion>> decompose_slice(const Slice& s,
                                                           const FiniteGroup& h) {
    for (const auto& g : h.generators())
        if (g.apply(s.axis) != s.axis)
            throw AxisNotFixedError("decompose_slice: group does not fix the axis");
    return decompose_under(s.points, h).parts;
}

}  // namespace ga
