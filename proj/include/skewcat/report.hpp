#pragma once

#include <string>
#include <vector>

namespace skewcat {

struct Violation {
    std::string axiom;    // e.g. "associativity", "d_squared", "unit_left"
    std::string witness;  // the basis labels / degrees that exhibit it
};

/* Validators collect violations instead of throwing; an empty report is a pass. */
struct Report {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string axiom, std::string witness) {
        violations.push_back({std::move(axiom), std::move(witness)});
    }

    // merge a sub-report under a prefix, e.g. "monoid."
    void absorb(const Report& sub, const std::string& prefix) {
        for (const auto& v : sub.violations) violations.push_back({prefix + v.axiom, v.witness});
    }

    std::string summary() const;
};

}  // namespace skewcat
