#include "ga/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

namespace ga {

FiniteGroup FiniteGroup::closure(std::vector<Isometry> generators, std::size_t cap) {
    FiniteGroup g;
    g.generators_ = generators;
    g.set_.insert(Isometry());
    std::queue<Isometry> todo;
    todo.push(Isometry());
    for (const auto& gen : generators)
        if (g.set_.insert(gen).second) todo.push(gen);
    while (!todo.empty()) {
        Isometry cur = todo.front();
        todo.pop();
        for (const auto& gen : generators) {
            Isometry next = cur * gen;
            if (g.set_.insert(next).second) {
                if (g.set_.size() > cap)
                    throw ClosureDivergedError("group closure exceeded cap of " +
                                               std::to_string(cap));
                todo.push(next);
            }
        }
    }
    g.elements_.assign(g.set_.begin(), g.set_.end());
    std::sort(g.elements_.begin(), g.elements_.end());
    return g;
}

FiniteGroup FiniteGroup::from_elements(std::vector<Isometry> elements,
                                       std::vector<Isometry> generators) {
    FiniteGroup g;
    g.set_.insert(elements.begin(), elements.end());
    g.elements_.assign(g.set_.begin(), g.set_.end());
    std::sort(g.elements_.begin(), g.elements_.end());
    g.generators_ = generators.empty() ? g.elements_ : std::move(generators);
    return g;
}

bool FiniteGroup::fixes(const GoldenQuaternion& x) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const Isometry& g) { return g.apply(x) == x; });
}

bool Orbit::contains(const GoldenQuaternion& q) const {
    return std::binary_search(points.begin(), points.end(), q,
                              [](const GoldenQuaternion& a, const GoldenQuaternion& b) {
                                  return a.compare(b) < 0;
                              });
}

Orbit orbit_of(const FiniteGroup& g, const GoldenQuaternion& x) {
    std::unordered_set<GoldenQuaternion> seen{x};
    std::queue<GoldenQuaternion> todo;
    todo.push(x);
    while (!todo.empty()) {
        GoldenQuaternion cur = todo.front();
        todo.pop();
        for (const auto& gen : g.generators()) {
            GoldenQuaternion next = gen.apply(cur);
            if (seen.insert(next).second) todo.push(next);
        }
    }
    Orbit orbit;
    orbit.seed = x;
    orbit.points.assign(seen.begin(), seen.end());
    std::sort(orbit.points.begin(), orbit.points.end());
    return orbit;
}

FiniteGroup stabilizer_of(const FiniteGroup& g, const GoldenQuaternion& x) {
    std::vector<Isometry> fixing;
    for (const auto& elem : g.elements())
        if (elem.apply(x) == x) fixing.push_back(elem);
    return FiniteGroup::from_elements(std::move(fixing));
}

std::vector<std::size_t> SetPartition::sizes() const {
    std::vector<std::size_t> s;
    s.reserve(parts.size());
    for (const auto& p : parts) s.push_back(p.size());
    std::sort(s.begin(), s.end());
    return s;
}

SetPartition decompose_under(const std::vector<GoldenQuaternion>& points, const FiniteGroup& h) {
    std::unordered_map<GoldenQuaternion, int> part_of;
    part_of.reserve(points.size());
    for (const auto& p : points) part_of.emplace(p, -1);
    if (part_of.size() != points.size())
        throw NotInvariantError("decompose_under: duplicate points in input");

    std::vector<GoldenQuaternion> sorted = points;
    std::sort(sorted.begin(), sorted.end());

    SetPartition result;
    for (const auto& seed : sorted) {
        if (part_of[seed] >= 0) continue;
        int id = (int)result.parts.size();
        std::vector<GoldenQuaternion> members;
        std::queue<GoldenQuaternion> todo;
        part_of[seed] = id;
        todo.push(seed);
        members.push_back(seed);
        while (!todo.empty()) {
            GoldenQuaternion cur = todo.front();
            todo.pop();
            for (const auto& gen : h.generators()) {
                GoldenQuaternion next = gen.apply(cur);
                auto it = part_of.find(next);
                if (it == part_of.end())
                    throw NotInvariantError("decompose_under: point set is not group-invariant");
                if (it->second < 0) {
                    it->second = id;
                    todo.push(next);
                    members.push_back(next);
                }
            }
        }
        std::sort(members.begin(), members.end());
        result.parts.push_back(std::move(members));
    }
    return result;
}

FiniteGroup build_aut_group() {
    const auto& k = icosian_constants();
    const GoldenQuaternion one = GoldenQuaternion::one();
    std::vector<Isometry> gens = {
        reflection_from_root(k.b),
        reflection_from_root(one),
        reflection_from_root(k.e3 * k.b),
        reflection_from_root(k.e3),
        Isometry::plain(k.e3, one),
    };
    return FiniteGroup::closure(gens, 400);
}

FiniteGroup build_axis_stabilizer_group() {
    const auto& k = icosian_constants();
    const GoldenQuaternion one = GoldenQuaternion::one();
    std::vector<Isometry> gens = {
        Isometry::star(one, one),
        Isometry::plain(k.b.conjugate(), k.b),
        reflection_from_root(k.e3),
    };
    return FiniteGroup::closure(gens, 20);
}

StandardGroups build_standard_groups(const IcosianGroup& icosians) {
    const auto& k = icosian_constants();
    const GoldenQuaternion one = GoldenQuaternion::one();

    StandardGroups s;
    s.w_h2 = FiniteGroup::closure({Isometry::plain(k.b, k.b), reflection_from_root(one)}, 10);
    s.w_h2_prime = FiniteGroup::closure(
        {Isometry::plain(k.b.conjugate(), k.b), reflection_from_root(k.e3)}, 10);
    s.w_h2_product = FiniteGroup::closure(
        {reflection_from_root(k.b), reflection_from_root(one),
         reflection_from_root(k.e3 * k.b), reflection_from_root(k.e3)},
        100);
    s.c4 = FiniteGroup::closure({Isometry::plain(k.e3, one)}, 4);
    s.aut = build_aut_group();

    // W(H3) has the explicit element form {[p,p~] and [p,p~]* for p in I}.
    std::vector<Isometry> h3;
    h3.reserve(240);
    for (const auto& p : icosians.elements()) {
        h3.push_back(Isometry::plain(p, p.conjugate()));
        h3.push_back(Isometry::star(p, p.conjugate()));
    }
    s.w_h3 = FiniteGroup::from_elements(std::move(h3));

    // W(H4) = {[p,q]} + {[p,q]*} over p,q in I; generated by one-sided
    // multiplications by the icosian generators plus a single star element.
    s.w_h4 = FiniteGroup::closure(
        {Isometry::plain(k.b, one), Isometry::plain(k.c, one), Isometry::plain(one, k.b),
         Isometry::plain(one, k.c), Isometry::star(one, one)},
        14400);
    return s;
}

}  // namespace ga
