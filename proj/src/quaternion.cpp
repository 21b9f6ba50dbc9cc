#include "ga/quaternion.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ga {

const GoldenQuaternion& GoldenQuaternion::one() {
    static const GoldenQuaternion q{1, 0, 0, 0};
    return q;
}
const GoldenQuaternion& GoldenQuaternion::e1() {
    static const GoldenQuaternion q{0, 1, 0, 0};
    return q;
}
const GoldenQuaternion& GoldenQuaternion::e2() {
    static const GoldenQuaternion q{0, 0, 1, 0};
    return q;
}
const GoldenQuaternion& GoldenQuaternion::e3() {
    static const GoldenQuaternion q{0, 0, 0, 1};
    return q;
}
const GoldenQuaternion& GoldenQuaternion::zero() {
    static const GoldenQuaternion q{};
    return q;
}

GoldenQuaternion GoldenQuaternion::operator+(const GoldenQuaternion& o) const {
    return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

GoldenQuaternion GoldenQuaternion::operator-(const GoldenQuaternion& o) const {
    return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}

GoldenQuaternion GoldenQuaternion::operator-() const {
    return {-c_[0], -c_[1], -c_[2], -c_[3]};
}

GoldenQuaternion GoldenQuaternion::operator*(const GoldenQuaternion& o) const {
    const auto& p = c_;
    const auto& q = o.c_;
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] + p[2] * q[0] + p[3] * q[1] - p[1] * q[3],
            p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
}

GoldenNumber GoldenQuaternion::norm_sq() const {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

bool GoldenQuaternion::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

GoldenQuaternion GoldenQuaternion::inverse() const {
    GoldenNumber n = norm_sq();
    if (n.is_zero()) throw std::domain_error("GoldenQuaternion::inverse: zero quaternion");
    GoldenNumber inv = n.inverse();
    GoldenQuaternion cj = conjugate();
    return {cj[0] * inv, cj[1] * inv, cj[2] * inv, cj[3] * inv};
}

GoldenQuaternion GoldenQuaternion::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    GoldenQuaternion result = one();
    GoldenQuaternion base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

int GoldenQuaternion::compare(const GoldenQuaternion& o) const {
    for (std::size_t i = 0; i < 4; ++i) {
        int c = c_[i].compare(o.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string GoldenQuaternion::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

GoldenQuaternion operator*(const GoldenNumber& s, const GoldenQuaternion& q) {
    return {s * q[0], s * q[1], s * q[2], s * q[3]};
}

GoldenNumber scalar_product(const GoldenQuaternion& p, const GoldenQuaternion& q) {
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
}

GoldenNumber distance_sq(const GoldenQuaternion& p, const GoldenQuaternion& q) {
    return (p - q).norm_sq();
}

std::ostream& operator<<(std::ostream& os, const GoldenQuaternion& q) {
    return os << "(" << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << ")";
}

std::size_t hash_value(const GoldenQuaternion& q) {
    std::size_t seed = 0;
    for (std::size_t i = 0; i < 4; ++i) boost::hash_combine(seed, hash_value(q[i]));
    return seed;
}

OrthonormalBasis OrthonormalBasis::from_unit(const GoldenQuaternion& v) {
    return {{v, GoldenQuaternion::e1() * v, GoldenQuaternion::e2() * v,
             GoldenQuaternion::e3() * v}};
}

bool OrthonormalBasis::is_orthonormal() const {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            GoldenNumber want = (i == j) ? GoldenNumber(1) : GoldenNumber(0);
            if (scalar_product(d[i], d[j]) != want) return false;
        }
    }
    return true;
}

std::array<GoldenNumber, 4> coords_in_basis(const GoldenQuaternion& q,
                                            const OrthonormalBasis& basis) {
    return {scalar_product(q, basis.d[0]), scalar_product(q, basis.d[1]),
            scalar_product(q, basis.d[2]), scalar_product(q, basis.d[3])};
}

}  // namespace ga
