#pragma once

#include "skewcat/skew.hpp"

namespace skewcat {

/* A right module over a finite-dimensional algebra: per basis element b, the
 * matrix of m ↦ m·b on column vectors. Acting by b then c equals acting by
 * b·c, so act(b·c) = act(c)·act(b) as matrices. */
class RightModule {
public:
    RightModule(Algebra algebra, std::size_t dim);

    const Algebra& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }

    void set_action(std::size_t basis_index, Matrix m);
    const Matrix& action(std::size_t basis_index) const { return action_[basis_index]; }

    // action of a general algebra element given by coefficients
    Matrix action_of(const std::vector<Scalar>& coeffs) const;

    bool operator==(const RightModule&) const = default;

private:
    Algebra algebra_;
    std::size_t dim_;
    std::vector<Matrix> action_;
};

Report validate_module(const RightModule& m);

/* An equivariant structure on a right A-module: invertible u_g with
 * u_e = id, u_g∘u_h = u_{hg} and u_g(m·a) = u_g(m)·(g⁻¹.a). */
class EquivariantModule {
public:
    EquivariantModule(RightModule base, std::vector<Matrix> u);

    const RightModule& base() const { return base_; }
    const Matrix& u(int g) const { return u_[static_cast<std::size_t>(g)]; }
    std::size_t group_size() const { return u_.size(); }

    bool operator==(const EquivariantModule&) const = default;

private:
    RightModule base_;
    std::vector<Matrix> u_;
};

// rho: the group action on the algebra the base module lives over
Report validate_equivariant(const EquivariantModule& e, const StrictAction& rho);

// m·(g,a) := u_g(m·a); a right module over skew_group_algebra(rho)
RightModule to_skew_module(const EquivariantModule& e, const StrictAction& rho);

// base = restriction along a ↦ (e,a); u_g(m) := m·(g, 1)
EquivariantModule from_skew_module(const RightModule& n, const StrictAction& rho);

// space of maps commuting with both actions (and with the u_g in the
// equivariant case), as matrices M -> N
std::vector<Matrix> hom_basis(const RightModule& m, const RightModule& n);
std::vector<Matrix> hom_basis(const EquivariantModule& m, const EquivariantModule& n);
std::size_t hom_dim(const RightModule& m, const RightModule& n);
std::size_t hom_dim(const EquivariantModule& m, const EquivariantModule& n);

// an invertible intertwiner, when one can be found; exhaustive over small
// prime fields, randomized search over the rationals
std::optional<Matrix> find_isomorphism(const RightModule& m, const RightModule& n);
std::optional<Matrix> find_isomorphism(const EquivariantModule& m, const EquivariantModule& n);

// to_skew ∘ from_skew(n) against n; reports the intertwiner outcome
Report roundtrip_check_module(const RightModule& n, const StrictAction& rho);
// from_skew ∘ to_skew(e) against e, in the equivariant sense
Report roundtrip_check_equivariant(const EquivariantModule& e, const StrictAction& rho);

}  // namespace skewcat
