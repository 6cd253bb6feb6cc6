#pragma once

#include "skewcat/dgcat.hpp"

namespace skewcat {

/* A finite monoid given by its full multiplication table. Declared inverses
 * promote it to a group; operations that need inverses refuse without them. */
class FiniteMonoid {
public:
    FiniteMonoid(std::vector<std::string> elements, std::vector<std::vector<int>> table,
                 int identity, std::optional<std::vector<int>> inverses = std::nullopt);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element_name(int g) const { return elements_[static_cast<std::size_t>(g)]; }
    std::optional<int> element_index(std::string_view name) const;

    int mul(int g, int h) const { return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
    int identity() const { return identity_; }
    bool has_inverses() const { return inverses_.has_value(); }
    int inverse(int g) const;  // throws NotAGroupError when inverses are absent

    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::optional<std::vector<int>>& inverses() const { return inverses_; }

    bool operator==(const FiniteMonoid&) const = default;

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<int>> table_;
    int identity_;
    std::optional<std::vector<int>> inverses_;
};

Report validate_monoid(const FiniteMonoid& m);

/* A strict action: one dg-endofunctor per monoid element, satisfying
 * ρ(e) = id and ρ(g)∘ρ(h) = ρ(gh) as equalities of data. */
struct StrictAction {
    FiniteMonoid monoid;
    DgCategory category;
    std::vector<DgFunctor> functors;  // indexed like monoid.elements()

    const DgFunctor& functor(int g) const { return functors[static_cast<std::size_t>(g)]; }
    int act_object(int g, int x) const { return functor(g).map_object(x); }
    Element act(int g, int x, int y, const Element& a) const {
        return apply_functor(functor(g), x, y, a);
    }
};

Report validate_action(const StrictAction& rho);

struct Orbits {
    std::vector<std::vector<int>> blocks;  // ordered by first occurrence
    std::vector<int> representatives;      // first-listed object of each block
    std::vector<int> orbit_of;             // object -> block index
};

Orbits object_orbits(const StrictAction& rho);  // throws NotAGroupError

struct Freeness {
    bool free = false;
    int witness_element = -1;  // g with g.x = x, g != e (when not free)
    int witness_object = -1;
};

Freeness is_free_on_objects(const StrictAction& rho);  // throws NotAGroupError

}  // namespace skewcat
