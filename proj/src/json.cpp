#include "tetra/json.hpp"

namespace tetra {

Json to_json_value(const GaussianInt& z) {
    return Json{{"re", z.re().get_str()}, {"im", z.im().get_str()}};
}

Json to_json_value(const GPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json_value(c));
    return out;
}

Json to_json_value(const Matrix4& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (const auto& e : m.row(r)) row.push_back(to_json_value(e));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json_value(const IdentityReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"kind", f.kind}});
    }
    return Json{
        {"id", r.id},
        {"window", {r.lo, r.hi}},
        {"checked", r.checked},
        {"failure_count", r.failure_count},
        {"failures", std::move(failures)},
        {"observed", {{"checked", r.observed}, {"held", r.observed_held}}},
        {"pass", r.pass()},
    };
}

}  // namespace tetra
