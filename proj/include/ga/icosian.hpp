#pragma once

#include "ga/errors.hpp"
#include "ga/quaternion.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace ga {

/// The fixed unit quaternions everything is built from: b and c are nearest
/// neighbours in the 12(1)+ class, e3 is orthogonal to both.
struct IcosianConstants {
    GoldenQuaternion b;   // (tau + sigma e1 + e2)/2, order 10
    GoldenQuaternion c;   // (tau - sigma e1 + e2)/2, order 10
    GoldenQuaternion e3;  // order 4
};

const IcosianConstants& icosian_constants();

/// The 120 unit quaternions transcribed class by class (the independent
/// cross-check for the multiplicative closure).
std::vector<GoldenQuaternion> table1_elements();

/**
 * The binary icosahedral group: the 120 unit quaternions that form the
 * vertices of the 600-cell.  Built as the multiplicative closure of {b, c}
 * and verified against the explicit table1_elements() list; elements are
 * kept in canonical (lexicographic) order for reproducible indices.
 */
class IcosianGroup {
public:
    static IcosianGroup build();

    const std::vector<GoldenQuaternion>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool contains(const GoldenQuaternion& q) const { return index_.count(q) != 0; }

    /// Position of q in canonical order; throws NotInGroupError.
    int index_of(const GoldenQuaternion& q) const;

    /// Smallest n >= 1 with q^n = 1; throws NotInGroupError.
    int element_order(const GoldenQuaternion& q) const;

    /// The class 12(1)+ translated to q: 12(1)+ * q.  Equals q * 12(1)+ and
    /// is exactly the set of group elements at squared distance sigma^2
    /// from q.  Throws NotInGroupError.
    std::vector<GoldenQuaternion> icosahedron_of(const GoldenQuaternion& q) const;

    /// Members of the conjugacy class with the given real part, sorted.
    std::vector<GoldenQuaternion> class_of_real_part(const GoldenNumber& re) const;

private:
    std::vector<GoldenQuaternion> elements_;
    std::unordered_map<GoldenQuaternion, int> index_;
};

struct ConjClass {
    std::string label;
    int element_order = 0;
    GoldenNumber real_part;
    std::vector<int> members;  // indices into IcosianGroup::elements()
};

/// Conjugacy classes of the group, one row per real part, in table order
/// {1, -1, 12(1)+, 12(1)-, 12(1)+', 12(1)-', 20(1)+, 20(1)-, 30(1)}.
struct ConjClassTable {
    std::vector<ConjClass> classes;

    const ConjClass* find(const std::string& label) const;
};

ConjClassTable classify_conjugacy(const IcosianGroup& g);

}  // namespace ga
