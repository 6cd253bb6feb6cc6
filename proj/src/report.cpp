#include "skewcat/report.hpp"

namespace skewcat {

std::string Report::summary() const {
    if (violations.empty()) return "ok";
    std::string s = std::to_string(violations.size()) + " violation(s):";
    for (const auto& v : violations) s += "\n  [" + v.axiom + "] " + v.witness;
    return s;
}

}  // namespace skewcat
