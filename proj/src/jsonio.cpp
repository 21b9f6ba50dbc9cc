#include "ga/jsonio.hpp"

#include <sstream>
#include <stdexcept>

namespace ga {

namespace {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational string with bad denominator: " + s);
    return make_rational(num, den);
}

}  // namespace

Json golden_to_json(const GoldenNumber& x) {
    return Json::array({rational_to_string(x.a()), rational_to_string(x.b())});
}

GoldenNumber golden_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("golden number json must be a pair of fraction strings");
    return {rational_from_string(j[0].get<std::string>()),
            rational_from_string(j[1].get<std::string>())};
}

Json golden_to_json_with_value(const GoldenNumber& x) {
    return Json{{"exact", golden_to_json(x)}, {"value", x.to_double()}};
}

Json quat_to_json(const GoldenQuaternion& q) {
    Json j = Json::array();
    for (std::size_t i = 0; i < 4; ++i) j.push_back(golden_to_json(q[i]));
    return j;
}

GoldenQuaternion quat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("quaternion json must be an array of four golden numbers");
    return {golden_from_json(j[0]), golden_from_json(j[1]), golden_from_json(j[2]),
            golden_from_json(j[3])};
}

Json quat_to_json_with_value(const GoldenQuaternion& q) {
    Json values = Json::array();
    for (std::size_t i = 0; i < 4; ++i) values.push_back(q[i].to_double());
    return Json{{"exact", quat_to_json(q)}, {"value", std::move(values)}};
}

}  // namespace ga
