#include "skewcat/groupact.hpp"

#include <algorithm>

namespace skewcat {

FiniteMonoid::FiniteMonoid(std::vector<std::string> elements, std::vector<std::vector<int>> table,
                           int identity, std::optional<std::vector<int>> inverses)
    : elements_(std::move(elements)),
      table_(std::move(table)),
      identity_(identity),
      inverses_(std::move(inverses)) {
    std::size_t n = elements_.size();
    if (table_.size() != n) throw ShapeError("monoid table has wrong row count");
    for (const auto& row : table_) {
        if (row.size() != n) throw ShapeError("monoid table has a ragged row");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw ShapeError("monoid table entry out of range");
    }
    if (identity_ < 0 || static_cast<std::size_t>(identity_) >= n)
        throw ShapeError("monoid identity out of range");
    if (inverses_ && inverses_->size() != n) throw ShapeError("monoid inverse list size mismatch");
}

std::optional<int> FiniteMonoid::element_index(std::string_view name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

int FiniteMonoid::inverse(int g) const {
    if (!inverses_) throw NotAGroupError("monoid '" + element_name(g) + "'-inverse requested but no inverses declared");
    return (*inverses_)[static_cast<std::size_t>(g)];
}

Report validate_monoid(const FiniteMonoid& m) {
    Report rep;
    int n = static_cast<int>(m.size());
    int e = m.identity();
    for (int g = 0; g < n; ++g) {
        if (m.mul(e, g) != g) rep.add("identity_left", m.element_name(g));
        if (m.mul(g, e) != g) rep.add("identity_right", m.element_name(g));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (m.mul(m.mul(g, h), k) != m.mul(g, m.mul(h, k)))
                    rep.add("associativity", m.element_name(g) + " , " + m.element_name(h) +
                                                 " , " + m.element_name(k));
    if (m.has_inverses())
        for (int g = 0; g < n; ++g) {
            int gi = m.inverse(g);
            if (m.mul(g, gi) != e || m.mul(gi, g) != e) rep.add("inverse", m.element_name(g));
        }
    return rep;
}

Report validate_action(const StrictAction& rho) {
    Report rep;
    rep.absorb(validate_monoid(rho.monoid), "monoid.");
    rep.absorb(validate_dg_category(rho.category), "category.");
    if (!rep.ok()) return rep;

    int n = static_cast<int>(rho.monoid.size());
    if (rho.functors.size() != rho.monoid.size()) {
        rep.add("functor_count", std::to_string(rho.functors.size()) + " functors for " +
                                     std::to_string(rho.monoid.size()) + " elements");
        return rep;
    }
    for (int g = 0; g < n; ++g)
        rep.absorb(validate_dg_functor(rho.functor(g), rho.category, rho.category),
                   "functor(" + rho.monoid.element_name(g) + ").");
    if (!rep.ok()) return rep;

    if (rho.functor(rho.monoid.identity()) != identity_functor(rho.category))
        rep.add("identity_functor", rho.monoid.element_name(rho.monoid.identity()));

    // ρ(g)∘ρ(h) = ρ(gh): apply h first, then g
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            DgFunctor lhs = compose_functors(rho.functor(h), rho.functor(g));
            if (lhs != rho.functor(rho.monoid.mul(g, h)))
                rep.add("action_composition",
                        rho.monoid.element_name(g) + " , " + rho.monoid.element_name(h));
        }
    return rep;
}

Orbits object_orbits(const StrictAction& rho) {
    if (!rho.monoid.has_inverses())
        throw NotAGroupError("object orbits need a group action");
    int n_obj = static_cast<int>(rho.category.object_count());
    int n_grp = static_cast<int>(rho.monoid.size());
    Orbits out;
    out.orbit_of.assign(static_cast<std::size_t>(n_obj), -1);
    for (int x = 0; x < n_obj; ++x) {
        if (out.orbit_of[static_cast<std::size_t>(x)] != -1) continue;
        int block_index = static_cast<int>(out.blocks.size());
        std::vector<int> block;
        for (int g = 0; g < n_grp; ++g) {
            int y = rho.act_object(g, x);
            if (out.orbit_of[static_cast<std::size_t>(y)] == -1) {
                out.orbit_of[static_cast<std::size_t>(y)] = block_index;
                block.push_back(y);
            }
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
        out.representatives.push_back(x);
    }
    return out;
}

Freeness is_free_on_objects(const StrictAction& rho) {
    if (!rho.monoid.has_inverses())
        throw NotAGroupError("freeness check needs a group action");
    int n_obj = static_cast<int>(rho.category.object_count());
    int n_grp = static_cast<int>(rho.monoid.size());
    for (int g = 0; g < n_grp; ++g) {
        if (g == rho.monoid.identity()) continue;
        for (int x = 0; x < n_obj; ++x)
            if (rho.act_object(g, x) == x) return Freeness{false, g, x};
    }
    return Freeness{true, -1, -1};
}

}  // namespace skewcat
