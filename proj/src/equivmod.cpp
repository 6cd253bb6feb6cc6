#include "skewcat/equivmod.hpp"

#include <random>

namespace skewcat {

RightModule::RightModule(Algebra algebra, std::size_t dim)
    : algebra_(std::move(algebra)), dim_(dim) {
    action_.assign(algebra_.dim(), Matrix(algebra_.field(), dim_, dim_));
}

void RightModule::set_action(std::size_t basis_index, Matrix m) {
    if (m.rows() != dim_ || m.cols() != dim_) throw ShapeError("module action matrix shape");
    if (m.field() != algebra_.field()) throw FieldMismatchError("module action matrix field");
    action_[basis_index] = std::move(m);
}

Matrix RightModule::action_of(const std::vector<Scalar>& coeffs) const {
    if (coeffs.size() != algebra_.dim()) throw ShapeError("action_of coefficient count");
    Matrix out(algebra_.field(), dim_, dim_);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) out = out + action_[i].scaled(coeffs[i]);
    return out;
}

Report validate_module(const RightModule& m) {
    Report rep;
    const Algebra& a = m.algebra();
    rep.absorb(a.validate(), "algebra.");
    if (!rep.ok()) return rep;
    if (!m.action_of(a.unit()).is_identity()) rep.add("module_unit", "ρ(1) ≠ id");
    // acting by b_i then b_j equals acting by b_i·b_j
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Matrix lhs = m.action(j) * m.action(i);
            if (lhs != m.action_of(a.product(i, j)))
                rep.add("module_associativity", a.basis()[i] + " , " + a.basis()[j]);
        }
    return rep;
}

EquivariantModule::EquivariantModule(RightModule base, std::vector<Matrix> u)
    : base_(std::move(base)), u_(std::move(u)) {
    for (const auto& m : u_)
        if (m.rows() != base_.dim() || m.cols() != base_.dim())
            throw ShapeError("equivariant structure matrix shape");
}

namespace {

// matrix of a ↦ g.a on the algebra basis, from the action's degree-0 block
Matrix algebra_action_matrix(const StrictAction& rho, int g) {
    std::size_t n = rho.category.hom_dim_at(0, 0, 0);
    const GradedMap* m = rho.functor(g).hom_map(0, 0);
    if (m == nullptr) return Matrix(rho.category.field(), n, n);
    const Matrix* blk = m->block(0);
    return blk ? *blk : Matrix(rho.category.field(), n, n);
}

void require_algebra_action(const StrictAction& rho) {
    if (!Algebra::from_category(rho.category))
        throw PreconditionError("the action must target a one-object degree-0 algebra");
    if (!rho.monoid.has_inverses()) throw NotAGroupError("equivariant modules need a group");
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field() || a.dim() != b.dim()) return false;
    if (a.unit() != b.unit()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.product(i, j) != b.product(i, j)) return false;
    return true;
}

}  // namespace

Report validate_equivariant(const EquivariantModule& e, const StrictAction& rho) {
    require_algebra_action(rho);
    Report rep;
    rep.absorb(validate_module(e.base()), "base.");
    const FiniteMonoid& mon = rho.monoid;
    if (e.group_size() != mon.size()) {
        rep.add("u_count", std::to_string(e.group_size()) + " matrices for " +
                               std::to_string(mon.size()) + " elements");
        return rep;
    }
    if (!rep.ok()) return rep;

    int n_grp = static_cast<int>(mon.size());
    if (!e.u(mon.identity()).is_identity()) rep.add("u_identity", "u_e ≠ id");
    for (int g = 0; g < n_grp; ++g)
        if (!inverse(e.u(g)).has_value()) rep.add("u_invertible", mon.element_name(g));
    // anti-cocycle: u_g ∘ u_h = u_{hg}
    for (int g = 0; g < n_grp; ++g)
        for (int h = 0; h < n_grp; ++h)
            if (e.u(g) * e.u(h) != e.u(mon.mul(h, g)))
                rep.add("u_anticocycle", mon.element_name(g) + " , " + mon.element_name(h));
    // semilinearity: u_g ∘ act(a) = act(g⁻¹.a) ∘ u_g
    const Algebra& alg = e.base().algebra();
    for (int g = 0; g < n_grp; ++g) {
        Matrix gi_mat = algebra_action_matrix(rho, mon.inverse(g));
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            std::vector<Scalar> basis_vec(alg.dim(), Scalar::zero(alg.field()));
            basis_vec[i] = Scalar::one(alg.field());
            Matrix lhs = e.u(g) * e.base().action(i);
            Matrix rhs = e.base().action_of(gi_mat.apply(basis_vec)) * e.u(g);
            if (lhs != rhs)
                rep.add("u_semilinear", mon.element_name(g) + " , " + alg.basis()[i]);
        }
    }
    return rep;
}

RightModule to_skew_module(const EquivariantModule& e, const StrictAction& rho) {
    require_algebra_action(rho);
    Algebra ag = skew_group_algebra(rho);
    std::size_t na = e.base().algebra().dim();
    RightModule out(std::move(ag), e.base().dim());
    int n_grp = static_cast<int>(rho.monoid.size());
    for (int g = 0; g < n_grp; ++g)
        for (std::size_t i = 0; i < na; ++i)
            out.set_action(static_cast<std::size_t>(g) * na + i, e.u(g) * e.base().action(i));
    return out;
}

EquivariantModule from_skew_module(const RightModule& n, const StrictAction& rho) {
    require_algebra_action(rho);
    Algebra ag = skew_group_algebra(rho);
    if (!same_algebra(n.algebra(), ag))
        throw PreconditionError("module is not over the skew group algebra of this action");
    auto a = *Algebra::from_category(rho.category);
    std::size_t na = a.dim();
    int n_grp = static_cast<int>(rho.monoid.size());
    int e = rho.monoid.identity();

    RightModule base(a, n.dim());
    for (std::size_t i = 0; i < na; ++i)
        base.set_action(i, n.action(static_cast<std::size_t>(e) * na + i));

    std::vector<Matrix> u;
    u.reserve(static_cast<std::size_t>(n_grp));
    for (int g = 0; g < n_grp; ++g) {
        std::vector<Scalar> coeffs(n.algebra().dim(), Scalar::zero(a.field()));
        for (std::size_t k = 0; k < na; ++k)
            coeffs[static_cast<std::size_t>(g) * na + k] = a.unit()[k];
        u.push_back(n.action_of(coeffs));
    }
    return EquivariantModule(std::move(base), std::move(u));
}

namespace {

// commutation constraints T·act_M(b) = act_N(b)·T stacked over vec(T);
// vec index of T_{rc} is r * cols(T) + c with T of shape n.dim x m.dim
Matrix intertwiner_system(const std::vector<Matrix>& constraints_m,
                          const std::vector<Matrix>& constraints_n, std::size_t dm,
                          std::size_t dn, const FieldSpec& f) {
    std::size_t unknowns = dm * dn;
    std::size_t block_rows = dm * dn;
    Matrix sys(f, block_rows * constraints_m.size(), unknowns);
    for (std::size_t c_idx = 0; c_idx < constraints_m.size(); ++c_idx) {
        const Matrix& a = constraints_m[c_idx];  // acts on M (cols of T)
        const Matrix& b = constraints_n[c_idx];  // acts on N (rows of T)
        std::size_t row0 = c_idx * block_rows;
        // entry (r, c) of T·a - b·T
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                std::size_t row = row0 + r * dm + c;
                for (std::size_t s = 0; s < dm; ++s) {
                    const Scalar& v = a.at(s, c);
                    if (!v.is_zero()) sys.at(row, r * dm + s) += v;
                }
                for (std::size_t s = 0; s < dn; ++s) {
                    const Scalar& v = b.at(r, s);
                    if (!v.is_zero()) sys.at(row, s * dm + c) -= v;
                }
            }
    }
    return sys;
}

std::vector<Matrix> unvectorize(const Matrix& kernel, std::size_t dn, std::size_t dm) {
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        Matrix t(kernel.field(), dn, dm);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) t.at(r, c) = kernel.at(r * dm + c, k);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Matrix> hom_basis_from_constraints(const std::vector<Matrix>& cm,
                                               const std::vector<Matrix>& cn, std::size_t dm,
                                               std::size_t dn, const FieldSpec& f) {
    if (dm == 0 || dn == 0) return {};
    if (cm.empty()) {
        // no constraints: every matrix is a map
        std::vector<Matrix> out;
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                Matrix t(f, dn, dm);
                t.at(r, c) = Scalar::one(f);
                out.push_back(std::move(t));
            }
        return out;
    }
    return unvectorize(kernel_basis(intertwiner_system(cm, cn, dm, dn, f)), dn, dm);
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Matrix> invertible_in_span(const std::vector<Matrix>& basis, std::size_t dim,
                                         const FieldSpec& f) {
    if (dim == 0) return Matrix(f, 0, 0);  // the empty matrix is an isomorphism of zero modules
    if (basis.empty()) return std::nullopt;
    for (const auto& t : basis)
        if (is_invertible(t)) return t;

    std::size_t h = basis.size();
    auto combine = [&](const std::vector<Scalar>& coeffs) {
        Matrix acc(f, dim, dim);
        for (std::size_t i = 0; i < h; ++i)
            if (!coeffs[i].is_zero()) acc = acc + basis[i].scaled(coeffs[i]);
        return acc;
    };

    if (f.kind == FieldSpec::Kind::prime_field) {
        // exhaustive when the search space is small
        std::uint64_t p = f.characteristic;
        double total = 1;
        for (std::size_t i = 0; i < h; ++i) total *= static_cast<double>(p);
        if (total <= 200000.0) {
            std::vector<std::uint64_t> idx(h, 0);
            while (true) {
                std::vector<Scalar> coeffs;
                coeffs.reserve(h);
                for (auto v : idx) coeffs.push_back(Scalar::from_residue(f, v));
                Matrix cand = combine(coeffs);
                if (is_invertible(cand)) return cand;
                std::size_t pos = 0;
                while (pos < h && ++idx[pos] == p) idx[pos++] = 0;
                if (pos == h) break;
            }
            return std::nullopt;
        }
    }

    // randomized search; if an invertible combination exists the determinant
    // is a nonzero polynomial in the coefficients, so random points hit it
    std::mt19937_64 rng(0x5eedc0de);
    for (int trial = 0; trial < 2000; ++trial) {
        long long spread = 2 + trial / 200;
        std::uniform_int_distribution<long long> dist(-spread, spread);
        std::vector<Scalar> coeffs;
        coeffs.reserve(h);
        if (f.kind == FieldSpec::Kind::prime_field) {
            std::uniform_int_distribution<std::uint64_t> pd(0, f.characteristic - 1);
            for (std::size_t i = 0; i < h; ++i)
                coeffs.push_back(Scalar::from_residue(f, pd(rng)));
        } else {
            for (std::size_t i = 0; i < h; ++i)
                coeffs.push_back(Scalar::from_int(f, dist(rng)));
        }
        Matrix cand = combine(coeffs);
        if (is_invertible(cand)) return cand;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Matrix> hom_basis(const RightModule& m, const RightModule& n) {
    if (!same_algebra(m.algebra(), n.algebra()))
        throw PreconditionError("hom_basis: modules over different algebras");
    std::vector<Matrix> cm, cn;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        cm.push_back(m.action(i));
        cn.push_back(n.action(i));
    }
    return hom_basis_from_constraints(cm, cn, m.dim(), n.dim(), m.algebra().field());
}

std::vector<Matrix> hom_basis(const EquivariantModule& m, const EquivariantModule& n) {
    if (!same_algebra(m.base().algebra(), n.base().algebra()))
        throw PreconditionError("hom_basis: modules over different algebras");
    if (m.group_size() != n.group_size())
        throw PreconditionError("hom_basis: different group sizes");
    std::vector<Matrix> cm, cn;
    for (std::size_t i = 0; i < m.base().algebra().dim(); ++i) {
        cm.push_back(m.base().action(i));
        cn.push_back(n.base().action(i));
    }
    for (std::size_t g = 0; g < m.group_size(); ++g) {
        cm.push_back(m.u(static_cast<int>(g)));
        cn.push_back(n.u(static_cast<int>(g)));
    }
    return hom_basis_from_constraints(cm, cn, m.base().dim(), n.base().dim(),
                                      m.base().algebra().field());
}

std::size_t hom_dim(const RightModule& m, const RightModule& n) {
    if (m.dim() == 0 || n.dim() == 0) return 0;
    return hom_basis(m, n).size();
}

std::size_t hom_dim(const EquivariantModule& m, const EquivariantModule& n) {
    if (m.base().dim() == 0 || n.base().dim() == 0) return 0;
    return hom_basis(m, n).size();
}

std::optional<Matrix> find_isomorphism(const RightModule& m, const RightModule& n) {
    if (m.dim() != n.dim()) return std::nullopt;
    return invertible_in_span(hom_basis(m, n), m.dim(), m.algebra().field());
}

std::optional<Matrix> find_isomorphism(const EquivariantModule& m, const EquivariantModule& n) {
    if (m.base().dim() != n.base().dim()) return std::nullopt;
    return invertible_in_span(hom_basis(m, n), m.base().dim(), m.base().algebra().field());
}

Report roundtrip_check_module(const RightModule& n, const StrictAction& rho) {
    Report rep;
    rep.absorb(validate_module(n), "input.");
    if (!rep.ok()) return rep;
    EquivariantModule e = from_skew_module(n, rho);
    rep.absorb(validate_equivariant(e, rho), "from_skew.");
    RightModule back = to_skew_module(e, rho);
    rep.absorb(validate_module(back), "to_skew.");
    if (!rep.ok()) return rep;
    auto iso = find_isomorphism(back, n);
    if (!iso) rep.add("roundtrip_isomorphism", "no invertible intertwiner found");
    return rep;
}

Report roundtrip_check_equivariant(const EquivariantModule& e, const StrictAction& rho) {
    Report rep;
    rep.absorb(validate_equivariant(e, rho), "input.");
    if (!rep.ok()) return rep;
    RightModule n = to_skew_module(e, rho);
    rep.absorb(validate_module(n), "to_skew.");
    if (!rep.ok()) return rep;
    EquivariantModule back = from_skew_module(n, rho);
    rep.absorb(validate_equivariant(back, rho), "from_skew.");
    if (!rep.ok()) return rep;
    auto iso = find_isomorphism(back, e);
    if (!iso) rep.add("roundtrip_isomorphism", "no invertible intertwiner found");
    return rep;
}

}  // namespace skewcat
