#include "ga/icosian.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace ga {

namespace {

const GoldenNumber& tau() { return GoldenNumber::tau(); }
const GoldenNumber& sigma() { return GoldenNumber::sigma(); }
GoldenNumber half() { return GoldenNumber(Rational(1, 2)); }

// All sign combinations of the nonzero entries of a coordinate pattern.
void push_signed(std::vector<GoldenQuaternion>& out, const std::array<GoldenNumber, 4>& pat) {
    std::vector<int> free_slots;
    for (int i = 1; i < 4; ++i)
        if (!pat[i].is_zero()) free_slots.push_back(i);
    int combos = 1 << free_slots.size();
    for (int mask = 0; mask < combos; ++mask) {
        GoldenQuaternion q{pat[0], pat[1], pat[2], pat[3]};
        for (std::size_t k = 0; k < free_slots.size(); ++k)
            if (mask & (1 << k)) q[free_slots[k]] = -q[free_slots[k]];
        out.push_back(q);
    }
}

}  // namespace

const IcosianConstants& icosian_constants() {
    static const IcosianConstants k = [] {
        GoldenNumber th = tau() * half();
        GoldenNumber sh = sigma() * half();
        IcosianConstants c;
        c.b = GoldenQuaternion{th, sh, half(), 0};
        c.c = GoldenQuaternion{th, -sh, half(), 0};
        c.e3 = GoldenQuaternion::e3();
        return c;
    }();
    return k;
}

std::vector<GoldenQuaternion> table1_elements() {
    GoldenNumber h = half();
    GoldenNumber th = tau() * h;
    GoldenNumber sh = sigma() * h;
    std::vector<GoldenQuaternion> out;
    out.reserve(120);

    out.push_back(GoldenQuaternion::one());
    out.push_back(-GoldenQuaternion::one());

    for (GoldenNumber re : {th, -th}) {  // 12(1)+ and 12(1)-
        push_signed(out, {re, h, 0, sh});
        push_signed(out, {re, sh, h, 0});
        push_signed(out, {re, 0, sh, h});
    }
    for (GoldenNumber re : {sh, -sh}) {  // 12(1)+' and 12(1)-'
        push_signed(out, {re, h, th, 0});
        push_signed(out, {re, 0, h, th});
        push_signed(out, {re, th, 0, h});
    }
    for (GoldenNumber re : {h, -h}) {  // 20(1)+ and 20(1)-
        push_signed(out, {re, h, h, h});
        push_signed(out, {re, th, sh, 0});
        push_signed(out, {re, 0, th, sh});
        push_signed(out, {re, sh, 0, th});
    }
    // 30(1)
    push_signed(out, {0, 1, 0, 0});
    push_signed(out, {0, 0, 1, 0});
    push_signed(out, {0, 0, 0, 1});
    push_signed(out, {0, sh, th, h});
    push_signed(out, {0, h, sh, th});
    push_signed(out, {0, th, h, sh});

    return out;
}

IcosianGroup IcosianGroup::build() {
    const auto& k = icosian_constants();
    std::unordered_set<GoldenQuaternion> seen{GoldenQuaternion::one()};
    std::queue<GoldenQuaternion> todo;
    todo.push(GoldenQuaternion::one());
    while (!todo.empty()) {
        GoldenQuaternion cur = todo.front();
        todo.pop();
        for (const auto& gen : {k.b, k.c}) {
            GoldenQuaternion next = cur * gen;
            if (seen.insert(next).second) {
                if (seen.size() > 120)
                    throw ClosureDivergedError("IcosianGroup: closure of {b,c} exceeds 120");
                todo.push(next);
            }
        }
    }

    std::unordered_set<GoldenQuaternion> expected;
    for (const auto& q : table1_elements()) expected.insert(q);
    if (seen != expected)
        throw std::logic_error("IcosianGroup: closure of {b,c} disagrees with the table list");

    IcosianGroup g;
    g.elements_.assign(seen.begin(), seen.end());
    std::sort(g.elements_.begin(), g.elements_.end());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) g.index_[g.elements_[i]] = (int)i;
    return g;
}

int IcosianGroup::index_of(const GoldenQuaternion& q) const {
    auto it = index_.find(q);
    if (it == index_.end()) throw NotInGroupError("quaternion not in the icosian group");
    return it->second;
}

int IcosianGroup::element_order(const GoldenQuaternion& q) const {
    index_of(q);
    GoldenQuaternion acc = q;
    for (int n = 1; n <= 10; ++n) {
        if (acc == GoldenQuaternion::one()) return n;
        acc = acc * q;
    }
    throw std::logic_error("element order exceeds 10 in a group of exponent 10");
}

std::vector<GoldenQuaternion> IcosianGroup::icosahedron_of(const GoldenQuaternion& q) const {
    index_of(q);
    GoldenNumber sigma_sq = sigma() * sigma();
    std::vector<GoldenQuaternion> left, right, near;
    for (const auto& x : class_of_real_part(tau() * half())) {
        left.push_back(x * q);
        right.push_back(q * x);
    }
    for (const auto& x : elements_)
        if (distance_sq(x, q) == sigma_sq) near.push_back(x);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::sort(near.begin(), near.end());
    if (left != right || left != near)
        throw std::logic_error("icosahedron_of: 12(1)+ translates are inconsistent");
    return left;
}

std::vector<GoldenQuaternion> IcosianGroup::class_of_real_part(const GoldenNumber& re) const {
    std::vector<GoldenQuaternion> out;
    for (const auto& q : elements_)
        if (q.real() == re) out.push_back(q);
    return out;
}

const ConjClass* ConjClassTable::find(const std::string& label) const {
    for (const auto& c : classes)
        if (c.label == label) return &c;
    return nullptr;
}

ConjClassTable classify_conjugacy(const IcosianGroup& g) {
    GoldenNumber h = half();
    GoldenNumber th = tau() * h;
    GoldenNumber sh = sigma() * h;
    const std::vector<std::tuple<std::string, int, GoldenNumber>> rows = {
        {"1", 1, GoldenNumber(1)},  {"-1", 2, GoldenNumber(-1)},
        {"12(1)+", 10, th},         {"12(1)-", 5, -th},
        {"12(1)+'", 10, sh},        {"12(1)-'", 5, -sh},
        {"20(1)+", 6, h},           {"20(1)-", 3, -h},
        {"30(1)", 4, GoldenNumber(0)},
    };

    ConjClassTable table;
    std::size_t total = 0;
    for (const auto& [label, order, re] : rows) {
        ConjClass cls;
        cls.label = label;
        cls.element_order = order;
        cls.real_part = re;
        for (std::size_t i = 0; i < g.elements().size(); ++i) {
            const auto& q = g.elements()[i];
            if (q.real() != re) continue;
            if (g.element_order(q) != order)
                throw std::logic_error("conjugacy class " + label + " has a wrong element order");
            cls.members.push_back((int)i);
        }
        total += cls.members.size();
        table.classes.push_back(std::move(cls));
    }
    if (total != g.size())
        throw std::logic_error("conjugacy classes do not partition the group");
    return table;
}

}  // namespace ga
