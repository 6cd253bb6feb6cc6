#pragma once

#include "skewcat/groupact.hpp"

namespace skewcat {

/* Output of the skew group construction A∗G: the category itself, the
 * embedding F_A: A -> A∗G (a ↦ (e,a)), and, for group actions, the induced
 * action h.(g,a) = (hgh⁻¹, h.a). Objects of the skew category correspond
 * index-wise to the objects of A. */
struct SkewResult {
    DgCategory category;
    DgFunctor embedding;
    std::optional<StrictAction> induced_action;
};

/* Offset of the g-summand inside hom_{A∗G}(X̃,Ỹ)_degree: summands are laid out
 * in monoid declaration order, each in the source category's basis order. */
std::size_t skew_summand_offset(const StrictAction& rho, int x, int y, int g, int degree);

// hom_{A∗G}(X̃,Ỹ) = ⊕_g hom_A(X, g.Y) with composition (g₁,a)▷(g₂,b) = (g₁g₂, a▷(g₁.b)),
// differential d(g,a) = (g, da) and units (e, id). Refuses invalid actions.
SkewResult skew_group_dg_category(const StrictAction& rho);

// the one-object, degree-0 case via the multiplication rule
// (g₁,a₁)·(g₂,a₂) = (g₁g₂, a₁·(g₁.a₂)); built independently of the
// dg construction so the two routes can be cross-checked
Algebra skew_group_algebra(const StrictAction& rho);

struct ReduceResult {
    DgCategory category;
    DgFunctor inclusion;                // into the skew category
    std::vector<int> representatives;   // skew-category object indices kept
};

// full subcategory of A∗G on one representative object per orbit
ReduceResult reduce(const StrictAction& rho, const SkewResult& skew,
                    std::optional<std::vector<int>> representatives = std::nullopt);

struct FreeifyResult {
    StrictAction action;       // ρ′ on A′, free on objects
    DgFunctor projection;      // π: A′ -> A, (x,g) ↦ g.x, identity on hom complexes
    std::vector<std::pair<int, int>> object_pairs;  // A′ object -> (representative, g)
};

// replace ρ by an equivalent action that is free on objects:
// objects (x,g) with x a representative, hom((x,g),(y,h)) = hom_A(g.x, h.y)
FreeifyResult freeify(const StrictAction& rho);

// conjugates the induced action through the orbit equivalences on the reduced
// skew category and checks that the result is the identity action; requires a
// free action and reports any deviation (none is expected: this is a theorem)
Report check_trivial_induced_action(const StrictAction& rho);

// F_A(h.X) = h.F_A(X) and F_A(h.a) = h.F_A(a) for all h and basis a
Report equivariance_of_embedding(const SkewResult& skew, const StrictAction& rho);

}  // namespace skewcat
