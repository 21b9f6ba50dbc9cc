#include "ga/cells.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace ga {

namespace {

const GoldenNumber& tau() { return GoldenNumber::tau(); }
const GoldenNumber& sigma() { return GoldenNumber::sigma(); }
GoldenNumber half() { return GoldenNumber(Rational(1, 2)); }

// ---------------------------------------------------------------------
// Integer arithmetic in Z[tau] (tau^2 = tau + 1) for the enumeration hot
// path.  Inputs are rescaled so every coordinate is u + t*tau with
// |u|, |t| <= kMaxCoord; with that bound every determinant and dot product
// below fits in int64 and the sign comparison fits in int128.  The point
// sets this library feeds in have |u|, |t| <= 4.
// ---------------------------------------------------------------------

constexpr std::int64_t kMaxCoord = 32;

struct TauInt {
    std::int64_t u = 0, t = 0;

    bool operator==(const TauInt&) const = default;
};

inline TauInt operator+(TauInt a, TauInt b) { return {a.u + b.u, a.t + b.t}; }
inline TauInt operator-(TauInt a, TauInt b) { return {a.u - b.u, a.t - b.t}; }
inline TauInt operator*(TauInt a, TauInt b) {
    return {a.u * b.u + a.t * b.t, a.u * b.t + a.t * b.u + a.t * b.t};
}
inline bool is_zero(TauInt a) { return a.u == 0 && a.t == 0; }

inline int sign(TauInt a) {
    // u + t*tau = ((2u+t) + t*sqrt5)/2
    std::int64_t big = 2 * a.u + a.t;
    std::int64_t small = a.t;
    if (big == 0 && small == 0) return 0;
    int sb = big > 0 ? 1 : (big < 0 ? -1 : 0);
    int ss = small > 0 ? 1 : (small < 0 ? -1 : 0);
    if (sb == 0) return ss;
    if (ss == 0 || sb == ss) return sb;
    __int128 lhs = (__int128)big * big;
    __int128 rhs = 5 * (__int128)small * small;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sb : ss;
}

using Vec4 = std::array<TauInt, 4>;

inline TauInt dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// Vector orthogonal to the span of three vectors: signed 3x3 minors of the
// 3x4 matrix (m0; m1; m2).
Vec4 orthogonal_complement(const Vec4& m0, const Vec4& m1, const Vec4& m2) {
    auto det3 = [&](int c0, int c1, int c2) {
        return m0[c0] * (m1[c1] * m2[c2] - m1[c2] * m2[c1]) -
               m0[c1] * (m1[c0] * m2[c2] - m1[c2] * m2[c0]) +
               m0[c2] * (m1[c0] * m2[c1] - m1[c1] * m2[c0]);
    };
    TauInt n0 = det3(1, 2, 3);
    TauInt n1 = det3(0, 2, 3);
    TauInt n2 = det3(0, 1, 3);
    TauInt n3 = det3(0, 1, 2);
    return {n0, TauInt{-n1.u, -n1.t}, n2, TauInt{-n3.u, -n3.t}};
}

// Unoriented projective key of a hyperplane.  The same geometric plane can
// be written with (n, d) scaled by any field element, including the units
// +-tau^k of Z[tau], so rational content reduction alone is not enough.
// Multiplying every component by the field conjugate of the first nonzero
// one turns an arbitrary field scaling into a rational one, which the
// content/sign reduction then removes.
struct PlaneKey {
    std::array<std::int64_t, 10> v;

    bool operator==(const PlaneKey&) const = default;
    bool operator<(const PlaneKey& o) const { return v < o.v; }
};

struct PlaneKeyHash {
    std::size_t operator()(const PlaneKey& k) const {
        std::size_t seed = 0;
        for (auto x : k.v) boost::hash_combine(seed, x);
        return seed;
    }
};

// Field conjugate within the tau basis: u + t*tau  ->  (u+t) - t*tau.
inline TauInt tau_conjugate(TauInt a) { return {a.u + a.t, -a.t}; }

PlaneKey make_plane_key(const Vec4& n, TauInt d) {
    std::array<TauInt, 5> comp{n[0], n[1], n[2], n[3], d};

    // Rational content first, to keep the products small.
    std::int64_t g = 0;
    auto acc = [&g](std::int64_t x) { g = std::gcd(g, x < 0 ? -x : x); };
    for (const auto& c : comp) {
        acc(c.u);
        acc(c.t);
    }
    if (g == 0) g = 1;
    for (auto& c : comp) c = TauInt{c.u / g, c.t / g};

    TauInt pivot{};
    for (const auto& c : comp) {
        if (!is_zero(c)) {
            pivot = c;
            break;
        }
    }
    TauInt conj = tau_conjugate(pivot);
    std::array<__int128, 10> wide;
    for (int i = 0; i < 5; ++i) {
        const TauInt& c = comp[i];
        wide[2 * i] = (__int128)c.u * conj.u + (__int128)c.t * conj.t;
        wide[2 * i + 1] =
            (__int128)c.u * conj.t + (__int128)c.t * conj.u + (__int128)c.t * conj.t;
    }
    __int128 wg = 0;
    auto gcd128 = [](__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 r = a % b;
            a = b;
            b = r;
        }
        return a;
    };
    for (auto x : wide) wg = gcd128(wg, x);
    if (wg == 0) wg = 1;
    std::array<std::int64_t, 10> v;
    bool flip = false, sign_set = false;
    for (int i = 0; i < 10; ++i) {
        __int128 x = wide[i] / wg;
        if (!sign_set && x != 0) {
            flip = x < 0;
            sign_set = true;
        }
        if (flip) x = -x;
        if (x > INT64_MAX || x < INT64_MIN)
            throw std::overflow_error("enumerate_facets: plane key out of range");
        v[i] = (std::int64_t)x;
    }
    return PlaneKey{v};
}

// Exact conversion to the tau basis: a + b*sqrt5 = (a-b) + 2b*tau.
std::pair<Rational, Rational> tau_basis(const GoldenNumber& x) {
    return {x.a() - x.b(), 2 * x.b()};
}

GoldenNumber golden_from_tau_pair(const Integer& u, const Integer& t) {
    return {make_rational(2 * u + t, 2), make_rational(t, 2)};
}

struct ScaledPoints {
    std::vector<Vec4> pts;
    Integer scale;  // pts = scale * original
};

ScaledPoints scale_to_integers(const std::vector<GoldenQuaternion>& points) {
    Integer lcm_den = 1;
    for (const auto& p : points) {
        for (int i = 0; i < 4; ++i) {
            auto [u, t] = tau_basis(p[i]);
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(u));
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(t));
        }
    }
    ScaledPoints out;
    out.scale = lcm_den;
    out.pts.reserve(points.size());
    for (const auto& p : points) {
        Vec4 v;
        for (int i = 0; i < 4; ++i) {
            auto [u, t] = tau_basis(p[i]);
            Integer ui = numerator(u) * (lcm_den / denominator(u));
            Integer ti = numerator(t) * (lcm_den / denominator(t));
            if (abs(ui) > kMaxCoord || abs(ti) > kMaxCoord)
                throw std::overflow_error(
                    "enumerate_facets: coordinates too large for the integer kernel");
            v[i] = TauInt{ui.convert_to<std::int64_t>(), ti.convert_to<std::int64_t>()};
        }
        out.pts.push_back(v);
    }
    return out;
}

int affine_rank(const std::vector<GoldenQuaternion>& points) {
    if (points.empty()) return -1;
    std::vector<std::array<GoldenNumber, 4>> rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        GoldenQuaternion d = points[i] - points[0];
        rows.push_back({d[0], d[1], d[2], d[3]});
    }
    int rank = 0;
    for (int col = 0; col < 4 && rank < (int)rows.size(); ++col) {
        int pivot = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        GoldenNumber inv = rows[rank][col].inverse();
        for (int j = col; j < 4; ++j) rows[rank][j] *= inv;
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            GoldenNumber f = rows[r][col];
            for (int j = col; j < 4; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

void scan_candidates(const std::vector<Vec4>& pts, int first, int stride,
                     std::unordered_set<PlaneKey, PlaneKeyHash>& found) {
    const int n = (int)pts.size();
    for (int i = first; i < n - 3; i += stride) {
        for (int j = i + 1; j < n - 2; ++j) {
            Vec4 d1{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], pts[j][2] - pts[i][2],
                    pts[j][3] - pts[i][3]};
            for (int k = j + 1; k < n - 1; ++k) {
                Vec4 d2{pts[k][0] - pts[i][0], pts[k][1] - pts[i][1], pts[k][2] - pts[i][2],
                        pts[k][3] - pts[i][3]};
                for (int l = k + 1; l < n; ++l) {
                    Vec4 d3{pts[l][0] - pts[i][0], pts[l][1] - pts[i][1],
                            pts[l][2] - pts[i][2], pts[l][3] - pts[i][3]};
                    Vec4 nrm = orthogonal_complement(d1, d2, d3);
                    if (is_zero(nrm[0]) && is_zero(nrm[1]) && is_zero(nrm[2]) &&
                        is_zero(nrm[3]))
                        continue;  // rank < 3
                    TauInt d = dot(nrm, pts[i]);
                    int sd = sign(d);
                    if (sd == 0) continue;  // plane through the center: not supporting
                    if (sd < 0) {
                        for (auto& c : nrm) c = TauInt{-c.u, -c.t};
                        d = TauInt{-d.u, -d.t};
                    }
                    bool supporting = true;
                    for (int m = 0; m < n; ++m) {
                        if (sign(dot(nrm, pts[m]) - d) > 0) {
                            supporting = false;
                            break;
                        }
                    }
                    if (supporting) found.insert(make_plane_key(nrm, d));
                }
            }
        }
    }
}

CellType classify_facet(const std::vector<int>& members,
                        const std::vector<GoldenQuaternion>& points) {
    if (members.size() == 4) return CellType::Tetrahedron;
    if (members.size() == 10) {
        std::vector<GoldenQuaternion> pts;
        pts.reserve(10);
        for (int m : members) pts.push_back(points[m]);
        if (has_pentagonal_antiprism_pattern(pts)) return CellType::PentagonalAntiprism;
    }
    return CellType::Other;
}

// Min-distance adjacency; empty result when there are fewer than 2 points.
std::vector<std::pair<int, int>> min_distance_edges(const std::vector<GoldenQuaternion>& pts) {
    std::vector<std::pair<int, int>> edges;
    GoldenNumber best;
    bool have = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            GoldenNumber d = distance_sq(pts[i], pts[j]);
            if (!have || d < best) {
                best = d;
                have = true;
                edges.clear();
            }
            if (d == best) edges.emplace_back((int)i, (int)j);
        }
    }
    return edges;
}

}  // namespace

Hyperplane Hyperplane::canonicalized() const {
    Integer lcm_den = 1;
    std::array<std::pair<Rational, Rational>, 5> parts;
    for (int i = 0; i < 4; ++i) parts[i] = tau_basis(normal[i]);
    parts[4] = tau_basis(offset);
    for (const auto& [u, t] : parts) {
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(u));
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(t));
    }
    std::array<Integer, 10> ints;
    for (int i = 0; i < 5; ++i) {
        ints[2 * i] = numerator(parts[i].first) * (lcm_den / denominator(parts[i].first));
        ints[2 * i + 1] = numerator(parts[i].second) * (lcm_den / denominator(parts[i].second));
    }
    Integer g = 0;
    for (const auto& x : ints) g = boost::multiprecision::gcd(g, abs(x));
    if (g == 0) g = 1;
    for (auto& x : ints) x /= g;

    Hyperplane out;
    for (int i = 0; i < 4; ++i) out.normal[i] = golden_from_tau_pair(ints[2 * i], ints[2 * i + 1]);
    out.offset = golden_from_tau_pair(ints[8], ints[9]);
    for (int i = 0; i < 4; ++i) {
        int s = out.normal[i].sign();
        if (s == 0) continue;
        if (s < 0) {
            out.normal = -out.normal;
            out.offset = -out.offset;
        }
        break;
    }
    return out;
}

std::vector<Facet> enumerate_facets(const std::vector<GoldenQuaternion>& points, int threads) {
    const int n = (int)points.size();
    if (n < 5) throw DegenerateInputError("enumerate_facets: need at least 5 points");
    {
        std::unordered_set<GoldenQuaternion> distinct(points.begin(), points.end());
        if ((int)distinct.size() != n)
            throw std::invalid_argument("enumerate_facets: duplicate points");
    }
    GoldenNumber radius_sq = points[0].norm_sq();
    if (radius_sq.is_zero())
        throw std::invalid_argument("enumerate_facets: points must avoid the origin");
    for (const auto& p : points)
        if (p.norm_sq() != radius_sq)
            throw std::invalid_argument("enumerate_facets: points not on a common sphere");
    if (affine_rank(points) < 4)
        throw DegenerateInputError("enumerate_facets: points do not span 4D");

    ScaledPoints scaled = scale_to_integers(points);

    int workers = std::max(1, std::min(threads, n));
    std::vector<std::unordered_set<PlaneKey, PlaneKeyHash>> partial(workers);
    if (workers == 1) {
        scan_candidates(scaled.pts, 0, 1, partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(scan_candidates, std::cref(scaled.pts), w, workers,
                              std::ref(partial[w]));
        for (auto& th : pool) th.join();
    }
    std::set<PlaneKey> planes;  // ordered: output independent of threading
    for (auto& part : partial) planes.insert(part.begin(), part.end());

    std::vector<Facet> facets;
    facets.reserve(planes.size());
    GoldenNumber inv_scale{make_rational(1, scaled.scale)};
    for (const auto& key : planes) {
        Vec4 nrm{TauInt{key.v[0], key.v[1]}, TauInt{key.v[2], key.v[3]},
                 TauInt{key.v[4], key.v[5]}, TauInt{key.v[6], key.v[7]}};
        TauInt d{key.v[8], key.v[9]};
        Facet f;
        for (int m = 0; m < n; ++m)
            if (dot(nrm, scaled.pts[m]) == d) f.vertices.push_back(m);
        for (int i = 0; i < 4; ++i)
            f.plane.normal[i] = golden_from_tau_pair(nrm[i].u, nrm[i].t);
        f.plane.offset = golden_from_tau_pair(d.u, d.t) * inv_scale;
        // The key is unoriented; restore the support orientation, which has
        // the origin (an interior point) strictly on the negative side.
        if (f.plane.offset.sign() < 0) {
            f.plane.normal = -f.plane.normal;
            f.plane.offset = -f.plane.offset;
        }
        f.type = classify_facet(f.vertices, points);
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(),
              [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
    return facets;
}

bool has_pentagonal_antiprism_pattern(const std::vector<GoldenQuaternion>& pts) {
    if (pts.size() != 10) return false;
    auto edges = min_distance_edges(pts);
    if (edges.size() != 20) return false;

    std::array<unsigned, 10> adj{};
    std::array<int, 10> degree{};
    for (auto [i, j] : edges) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
        ++degree[i];
        ++degree[j];
    }
    for (int d : degree)
        if (d != 4) return false;

    // Pentagon edges: endpoints share exactly one neighbour; band edges two.
    std::array<unsigned, 10> pentagon{};
    int pentagon_edges = 0;
    for (auto [i, j] : edges) {
        int common = std::popcount(adj[i] & adj[j]);
        if (common == 1) {
            pentagon[i] |= 1u << j;
            pentagon[j] |= 1u << i;
            ++pentagon_edges;
        } else if (common != 2) {
            return false;
        }
    }
    if (pentagon_edges != 10) return false;
    for (int v = 0; v < 10; ++v)
        if (std::popcount(pentagon[v]) != 2) return false;

    // The pentagon edges must close into two disjoint 5-cycles.
    std::array<bool, 10> seen{};
    int cycles = 0;
    for (int start = 0; start < 10; ++start) {
        if (seen[start]) continue;
        int len = 0;
        int prev = -1, cur = start;
        do {
            seen[cur] = true;
            ++len;
            unsigned nbrs = pentagon[cur];
            int next = -1;
            while (nbrs) {
                int cand = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (cand != prev) {
                    next = cand;
                    break;
                }
            }
            prev = cur;
            cur = next;
        } while (cur != start && cur >= 0);
        if (cur != start || len != 5) return false;
        ++cycles;
    }
    return cycles == 2;
}

bool is_regular_pentagonal_antiprism(const std::vector<GoldenQuaternion>& pts) {
    if (!has_pentagonal_antiprism_pattern(pts)) return false;
    auto edges = min_distance_edges(pts);
    GoldenNumber edge_sq = distance_sq(pts[edges[0].first], pts[edges[0].second]);

    // Squared distances of the regular shape with this edge: the 20 edges,
    // then pentagon diagonals together with the near cross pairs at
    // tau^2 e (10 + 10), then the five far cross pairs at (2+tau) e.
    std::vector<GoldenNumber> expected;
    expected.reserve(45);
    GoldenNumber diag = tau() * tau() * edge_sq;
    GoldenNumber far = (GoldenNumber(2) + tau()) * edge_sq;
    for (int i = 0; i < 20; ++i) expected.push_back(edge_sq);
    for (int i = 0; i < 20; ++i) expected.push_back(diag);
    for (int i = 0; i < 5; ++i) expected.push_back(far);
    std::sort(expected.begin(), expected.end());
    return distance_multiset(pts) == expected;
}

std::vector<GoldenNumber> distance_multiset(const std::vector<GoldenQuaternion>& pts) {
    std::vector<GoldenNumber> out;
    out.reserve(pts.size() * (pts.size() - 1) / 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            out.push_back(distance_sq(pts[i], pts[j]));
    std::sort(out.begin(), out.end());
    return out;
}

int GrandAntiprism::index_of(const GoldenQuaternion& q) const {
    auto it = index_.find(q);
    if (it == index_.end()) throw NotInGroupError("not a grand antiprism vertex");
    return it->second;
}

std::vector<GoldenQuaternion> GrandAntiprism::ring_points(Ring r) const {
    std::vector<GoldenQuaternion> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (ring[i] == r) out.push_back(vertices[i]);
    return out;
}

GrandAntiprism ga_vertices() {
    const auto& k = icosian_constants();
    std::vector<GoldenQuaternion> b_pow(10);
    b_pow[0] = GoldenQuaternion::one();
    for (int m = 1; m < 10; ++m) b_pow[m] = b_pow[m - 1] * k.b;

    std::map<GoldenQuaternion, Ring> labelled;
    for (int m = 0; m < 10; ++m) {
        for (int n = 0; n < 10; ++n) {
            labelled.emplace(b_pow[m] * k.c * b_pow[n], Ring::R1);
            labelled.emplace(b_pow[m] * k.e3 * k.c * b_pow[n], Ring::R2);
        }
    }
    if (labelled.size() != 100)
        throw std::logic_error("grand antiprism: expected 100 distinct vertices");

    GrandAntiprism ga;
    for (const auto& [q, r] : labelled) {
        ga.index_.emplace(q, (int)ga.vertices.size());
        ga.vertices.push_back(q);
        ga.ring.push_back(r);
    }
    return ga;
}

std::vector<GoldenQuaternion> h2h2_roots() {
    const auto& k = icosian_constants();
    std::vector<GoldenQuaternion> roots;
    GoldenQuaternion p = GoldenQuaternion::one();
    for (int m = 0; m < 10; ++m) {
        roots.push_back(p);
        roots.push_back(k.e3 * p);
        p = p * k.b;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<GoldenQuaternion> c_neighbour_list() {
    GoldenNumber h = half();
    GoldenNumber th = tau() * h;
    GoldenNumber sh = sigma() * h;
    return {
        {h, h, h, -h},   {h, 0, th, -sh}, {th, h, 0, -sh}, {h, th, -sh, 0},
        {th, 0, -sh, h}, {-sh, h, th, 0}, {th, h, 0, sh},  {th, 0, -sh, -h},
        {h, h, h, h},    {h, 0, th, sh},
    };
}

RingReport verify_ring_relations(const GrandAntiprism& ga) {
    const auto& k = icosian_constants();
    auto r1 = ga.ring_points(Ring::R1);
    auto r2 = ga.ring_points(Ring::R2);

    RingReport rep;
    rep.sizes_ok = r1.size() == 50 && r2.size() == 50;

    auto as_set = [](const std::vector<GoldenQuaternion>& v) {
        return std::unordered_set<GoldenQuaternion>(v.begin(), v.end());
    };
    auto left_mul = [&](const std::vector<GoldenQuaternion>& v) {
        std::unordered_set<GoldenQuaternion> out;
        for (const auto& q : v) out.insert(k.e3 * q);
        return out;
    };
    auto right_mul = [&](const std::vector<GoldenQuaternion>& v) {
        std::unordered_set<GoldenQuaternion> out;
        for (const auto& q : v) out.insert(q * k.e3);
        return out;
    };
    auto set1 = as_set(r1);
    auto set2 = as_set(r2);
    rep.e3_left_r1 = left_mul(r1) == set2;
    rep.e3_right_r1 = right_mul(r1) == set2;
    rep.e3_left_r2 = left_mul(r2) == set1;
    rep.e3_right_r2 = right_mul(r2) == set1;

    auto figure = c_neighbour_list();
    rep.figure_membership = ga.ring_of(k.c) == Ring::R1;
    const bool in_r1[10] = {false, true, true, false, true, false, true, true, false, true};
    for (int i = 0; i < 10; ++i) {
        Ring want = in_r1[i] ? Ring::R1 : Ring::R2;
        if (ga.ring_of(figure[i]) != want) rep.figure_membership = false;
    }
    return rep;
}

std::vector<GoldenQuaternion> antiprism_centers(const std::vector<Facet>& facets,
                                                const GrandAntiprism& ga) {
    GoldenNumber tenth{make_rational(1, 10)};
    std::vector<GoldenQuaternion> centers;
    for (const auto& f : facets) {
        if (f.type != CellType::PentagonalAntiprism) continue;
        GoldenQuaternion sum = GoldenQuaternion::zero();
        for (int v : f.vertices) sum = sum + ga.vertices[v];
        centers.push_back(tenth * sum);
    }
    std::sort(centers.begin(), centers.end());
    return centers;
}

CellCensus cell_census(const std::vector<Facet>& facets, const GrandAntiprism& ga) {
    CellCensus census;
    census.per_vertex.assign(ga.vertices.size(), {0, 0});
    std::size_t other = 0;
    for (const auto& f : facets) {
        if (f.type == CellType::Tetrahedron) {
            int on_r1 = 0;
            for (int v : f.vertices)
                if (ga.ring[v] == Ring::R1) ++on_r1;
            if (on_r1 == 2)
                ++census.tetra_22;
            else if (on_r1 == 3)
                ++census.tetra_31;
            else if (on_r1 == 1)
                ++census.tetra_13;
            else
                ++other;
            for (int v : f.vertices) ++census.per_vertex[v].first;
        } else if (f.type == CellType::PentagonalAntiprism) {
            ++census.antiprisms;
            for (int v : f.vertices) ++census.per_vertex[v].second;
        } else {
            ++other;
        }
    }
    census.per_vertex_ok =
        std::all_of(census.per_vertex.begin(), census.per_vertex.end(),
                    [](const std::pair<int, int>& pv) { return pv == std::pair{12, 2}; });

    std::size_t tets = census.tetra_22 + census.tetra_31 + census.tetra_13;
    if (tets != 300 || census.antiprisms != 20 || other != 0 || !census.per_vertex_ok) {
        std::ostringstream os;
        os << "cell census mismatch: tetrahedra " << tets << " (" << census.tetra_22 << "+"
           << census.tetra_31 << "+" << census.tetra_13 << ", want 100+100+100), antiprisms "
           << census.antiprisms << " (want 20), unclassified " << other
           << ", per-vertex incidence " << (census.per_vertex_ok ? "ok" : "broken");
        throw CensusMismatchError(os.str());
    }
    return census;
}

VertexFigure vertex_figure(const GoldenQuaternion& v, const GrandAntiprism& ga,
                           const FiniteGroup& aut) {
    ga.index_of(v);
    GoldenNumber sigma_sq = sigma() * sigma();

    VertexFigure fig;
    fig.vertex = v;
    for (const auto& q : ga.vertices)
        if (distance_sq(q, v) == sigma_sq) fig.neighbors.push_back(q);
    if (fig.neighbors.size() != 10)
        throw std::logic_error("vertex figure: expected 10 nearest vertices");

    fig.basis = OrthonormalBasis::from_unit(v);
    GoldenNumber th = tau() * half();
    for (const auto& q : fig.neighbors) {
        auto coords = coords_in_basis(q, fig.basis);
        if (coords[0] != th)
            throw std::logic_error("vertex figure: neighbour off the expected hyperplane");
        fig.coords.push_back({2 * coords[1], 2 * coords[2], 2 * coords[3]});
    }

    FiniteGroup stab = stabilizer_of(aut, v);
    SetPartition partition = decompose_under(fig.neighbors, stab);
    for (const auto& part : partition.parts) {
        std::vector<int> idx;
        for (const auto& q : part) {
            auto it = std::find(fig.neighbors.begin(), fig.neighbors.end(), q);
            idx.push_back((int)(it - fig.neighbors.begin()));
        }
        std::sort(idx.begin(), idx.end());
        fig.stabilizer_orbits.push_back(std::move(idx));
    }
    std::sort(fig.stabilizer_orbits.begin(), fig.stabilizer_orbits.end());
    return fig;
}

}  // namespace ga
