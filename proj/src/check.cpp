#include "tetra/check.hpp"

namespace tetra {

std::string CheckResult::detail() const {
    if (pass()) return "pass";
    const Mismatch& m = mismatches.front();
    std::string out = m.inputs + ": " + m.lhs + " != " + m.rhs;
    if (m.kind != "mismatch") out += " [" + m.kind + "]";
    if (mismatches.size() > 1) out += " (+" + std::to_string(mismatches.size() - 1) + " more)";
    return out;
}

}  // namespace tetra
