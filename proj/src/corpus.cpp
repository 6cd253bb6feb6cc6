#include "skewcat/corpus.hpp"

#include <array>

namespace skewcat::corpus {

namespace {

std::vector<Scalar> unit_vec(const FieldSpec& f, std::size_t n, std::size_t at) {
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[at] = Scalar::one(f);
    return v;
}

DgFunctor one_object_endo(Matrix block) {
    DgFunctor fn;
    fn.object_map = {0};
    GradedMap m(0);
    m.set_block(0, std::move(block));
    fn.set_hom_map(0, 0, std::move(m));
    return fn;
}

}  // namespace

FiniteMonoid group_z2() {
    return FiniteMonoid({"e", "s"}, {{0, 1}, {1, 0}}, 0, std::vector<int>{0, 1});
}

FiniteMonoid group_z3() {
    return FiniteMonoid({"e", "r", "rr"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0,
                        std::vector<int>{0, 2, 1});
}

FiniteMonoid group_s3() {
    // permutations of {0,1,2}; product g·h applies h first, then g
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2},  // e
        {1, 2, 0},  // r
        {2, 0, 1},  // rr
        {1, 0, 2},  // a
        {2, 1, 0},  // b
        {0, 2, 1},  // c
    }};
    auto find = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw Error("s3 table construction failed");
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    std::vector<int> inv(6);
    for (int g = 0; g < 6; ++g) {
        for (int h = 0; h < 6; ++h) {
            std::array<int, 3> gh{};
            for (int i = 0; i < 3; ++i)
                gh[static_cast<std::size_t>(i)] =
                    perms[static_cast<std::size_t>(g)]
                         [static_cast<std::size_t>(perms[static_cast<std::size_t>(h)]
                                                       [static_cast<std::size_t>(i)])];
            table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = find(gh);
        }
        std::array<int, 3> gi{};
        for (int i = 0; i < 3; ++i)
            gi[static_cast<std::size_t>(
                perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)])] = i;
        inv[static_cast<std::size_t>(g)] = find(gi);
    }
    return FiniteMonoid({"e", "r", "rr", "a", "b", "c"}, std::move(table), 0, std::move(inv));
}

FiniteMonoid monoid_t3() {
    return FiniteMonoid({"e", "t", "tt"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
}

FiniteMonoid monoid_idem() { return FiniteMonoid({"e", "t"}, {{0, 1}, {1, 1}}, 0); }

Algebra algebra_k(const FieldSpec& f) {
    Algebra a(f, {"1"});
    a.set_product(0, 0, unit_vec(f, 1, 0));
    a.set_unit(unit_vec(f, 1, 0));
    return a;
}

Algebra algebra_k2(const FieldSpec& f) {
    Algebra a(f, {"p", "q"});
    a.set_product(0, 0, unit_vec(f, 2, 0));
    a.set_product(1, 1, unit_vec(f, 2, 1));
    std::vector<Scalar> one{Scalar::one(f), Scalar::one(f)};
    a.set_unit(std::move(one));
    return a;
}

Algebra algebra_dual(const FieldSpec& f) {
    Algebra a(f, {"1", "x"});
    a.set_product(0, 0, unit_vec(f, 2, 0));
    a.set_product(0, 1, unit_vec(f, 2, 1));
    a.set_product(1, 0, unit_vec(f, 2, 1));
    a.set_unit(unit_vec(f, 2, 0));
    return a;
}

Algebra algebra_m2(const FieldSpec& f) {
    // basis E11, E12, E21, E22; E_ab ▷ E_cd = δ_bc E_ad
    Algebra a(f, {"E11", "E12", "E21", "E22"});
    auto idx = [](int r, int c) { return static_cast<std::size_t>(2 * (r - 1) + (c - 1)); };
    for (int r1 = 1; r1 <= 2; ++r1)
        for (int c1 = 1; c1 <= 2; ++c1)
            for (int r2 = 1; r2 <= 2; ++r2)
                for (int c2 = 1; c2 <= 2; ++c2) {
                    std::vector<Scalar> out(4, Scalar::zero(f));
                    if (c1 == r2) out[idx(r1, c2)] = Scalar::one(f);
                    a.set_product(idx(r1, c1), idx(r2, c2), std::move(out));
                }
    std::vector<Scalar> u(4, Scalar::zero(f));
    u[idx(1, 1)] = Scalar::one(f);
    u[idx(2, 2)] = Scalar::one(f);
    a.set_unit(std::move(u));
    return a;
}

Algebra group_algebra(const FieldSpec& f, const FiniteMonoid& g) {
    Algebra a(f, g.elements());
    std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.set_product(
                i, j,
                unit_vec(f, n,
                         static_cast<std::size_t>(g.mul(static_cast<int>(i),
                                                        static_cast<int>(j)))));
    a.set_unit(unit_vec(f, n, static_cast<std::size_t>(g.identity())));
    return a;
}

DgCategory dg_epsilon(const FieldSpec& f) {
    DgCategory c(f);
    int x = c.add_object("*");
    HomData h;
    h.complex.field = f;
    h.complex.dims = {{0, 1}, {1, 1}};
    h.basis[0] = {"1"};
    h.basis[1] = {"eps"};
    Matrix d(f, 1, 1);
    d.at(0, 0) = Scalar::one(f);
    h.complex.differential.set_block(1, std::move(d));
    c.set_hom(x, x, std::move(h));
    c.add_comp_entry(x, x, x, 0, 0, 0, 0, 0, Scalar::one(f));  // 1 ▷ 1 = 1
    c.add_comp_entry(x, x, x, 0, 0, 1, 0, 0, Scalar::one(f));  // 1 ▷ ε = ε
    c.add_comp_entry(x, x, x, 1, 0, 0, 0, 0, Scalar::one(f));  // ε ▷ 1 = ε
    // ε ▷ ε = 0: no degree-2 piece
    c.set_unit(x, element_basis(f, 0, 0, 1));
    return c;
}

DgCategory dg_endcone(const FieldSpec& f) {
    // maps of the complex k --id--> k (degrees 1, 0): f00, f11 in degree 0,
    // s: C0 -> C1 in degree 1, t: C1 -> C0 in degree -1; composition is
    // diagrammatic, the differential is D(f) = (-1)^{|f|} d∘f - f∘d
    DgCategory c(f);
    int x = c.add_object("*");
    HomData h;
    h.complex.field = f;
    h.complex.dims = {{-1, 1}, {0, 2}, {1, 1}};
    h.basis[-1] = {"t"};
    h.basis[0] = {"f00", "f11"};
    h.basis[1] = {"s"};
    Scalar one = Scalar::one(f);
    {
        Matrix d0(f, 1, 2);  // f00 ↦ -t, f11 ↦ t
        d0.at(0, 0) = -one;
        d0.at(0, 1) = one;
        h.complex.differential.set_block(0, std::move(d0));
        Matrix d1(f, 2, 1);  // s ↦ -f00 - f11
        d1.at(0, 0) = -one;
        d1.at(1, 0) = -one;
        h.complex.differential.set_block(1, std::move(d1));
    }
    c.set_hom(x, x, std::move(h));

    auto put = [&](int p, std::size_t i, int q, std::size_t j, int r, std::size_t k,
                   const Scalar& v) {
        (void)r;
        c.add_comp_entry(x, x, x, p, i, q, j, k, v);
    };
    std::size_t F00 = 0, F11 = 1;
    // degree 0 ▷ degree 0
    put(0, F00, 0, F00, 0, F00, one);
    put(0, F11, 0, F11, 0, F11, one);
    // degree 0 ▷ ±1 and ±1 ▷ degree 0
    put(0, F00, 1, 0, 1, 0, one);    // f00 ▷ s = s
    put(1, 0, 0, F11, 1, 0, one);    // s ▷ f11 = s
    put(0, F11, -1, 0, -1, 0, one);  // f11 ▷ t = t
    put(-1, 0, 0, F00, -1, 0, one);  // t ▷ f00 = t
    // s ▷ t = f00, t ▷ s = f11
    put(1, 0, -1, 0, 0, F00, one);
    put(-1, 0, 1, 0, 0, F11, one);
    Element u = element_add(element_basis(f, 0, 0, 2), element_basis(f, 0, 1, 2));
    c.set_unit(x, std::move(u));
    return c;
}

DgCategory two_point_category(const FieldSpec& f) { return n_point_category(f, 2); }

DgCategory n_point_category(const FieldSpec& f, int n) {
    DgCategory c(f);
    for (int i = 0; i < n; ++i) {
        std::string name(1, static_cast<char>('X' + i));
        int x = c.add_object(name);
        HomData h;
        h.complex.field = f;
        h.complex.dims = {{0, 1}};
        h.basis[0] = {"1" + name};
        c.set_hom(x, x, std::move(h));
        c.add_comp_entry(x, x, x, 0, 0, 0, 0, 0, Scalar::one(f));
        c.set_unit(x, element_basis(f, 0, 0, 1));
    }
    return c;
}

StrictAction trivial_action(const FiniteMonoid& m, const DgCategory& c) {
    StrictAction rho{m, c, {}};
    for (std::size_t g = 0; g < m.size(); ++g) rho.functors.push_back(identity_functor(c));
    return rho;
}

StrictAction action_swap_k2(const FieldSpec& f) {
    DgCategory c = algebra_k2(f).as_category();
    Matrix swap(f, 2, 2);
    swap.at(0, 1) = Scalar::one(f);
    swap.at(1, 0) = Scalar::one(f);
    StrictAction rho{group_z2(), c, {}};
    rho.functors.push_back(identity_functor(c));
    rho.functors.push_back(one_object_endo(std::move(swap)));
    return rho;
}

StrictAction action_negx_dual(const FieldSpec& f) {
    DgCategory c = algebra_dual(f).as_category();
    Matrix neg = Matrix::identity(f, 2);
    neg.at(1, 1) = -Scalar::one(f);
    StrictAction rho{group_z2(), c, {}};
    rho.functors.push_back(identity_functor(c));
    rho.functors.push_back(one_object_endo(std::move(neg)));
    return rho;
}

StrictAction action_inv_kz3(const FieldSpec& f) {
    DgCategory c = group_algebra(f, group_z3()).as_category();
    Matrix inv(f, 3, 3);
    inv.at(0, 0) = Scalar::one(f);  // e ↦ e
    inv.at(2, 1) = Scalar::one(f);  // r ↦ rr
    inv.at(1, 2) = Scalar::one(f);  // rr ↦ r
    StrictAction rho{group_z2(), c, {}};
    rho.functors.push_back(identity_functor(c));
    rho.functors.push_back(one_object_endo(std::move(inv)));
    return rho;
}

namespace {

// permutation action on an n-point category: element g sends object x to perm[g][x]
StrictAction permutation_action(const FieldSpec& f, const FiniteMonoid& m,
                                const std::vector<std::vector<int>>& perm) {
    DgCategory c = n_point_category(f, static_cast<int>(perm.front().size()));
    StrictAction rho{m, c, {}};
    for (std::size_t g = 0; g < m.size(); ++g) {
        DgFunctor fn;
        fn.object_map = perm[g];
        for (std::size_t x = 0; x < c.object_count(); ++x) {
            GradedMap gm(0);
            gm.set_block(0, Matrix::identity(f, 1));
            fn.set_hom_map(static_cast<int>(x), static_cast<int>(x), std::move(gm));
        }
        rho.functors.push_back(std::move(fn));
    }
    return rho;
}

}  // namespace

StrictAction action_swap_2obj(const FieldSpec& f) {
    return permutation_action(f, group_z2(), {{0, 1}, {1, 0}});
}

StrictAction action_cycle3(const FieldSpec& f) {
    return permutation_action(f, group_z3(), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

StrictAction action_proj_k2(const FieldSpec& f) {
    DgCategory c = algebra_k2(f).as_category();
    // t: p ↦ 1, q ↦ 0 is a unital idempotent algebra endomorphism
    Matrix proj(f, 2, 2);
    proj.at(0, 0) = Scalar::one(f);
    proj.at(1, 0) = Scalar::one(f);
    StrictAction rho{monoid_idem(), c, {}};
    rho.functors.push_back(identity_functor(c));
    rho.functors.push_back(one_object_endo(std::move(proj)));
    return rho;
}

ChainComplex point_complex(const FieldSpec& f, int degree) {
    ChainComplex c;
    c.field = f;
    c.dims[degree] = 1;
    return c;
}

ChainComplex cone_id(const FieldSpec& f) {
    ChainComplex c;
    c.field = f;
    c.dims = {{0, 1}, {1, 1}};
    Matrix d(f, 1, 1);
    d.at(0, 0) = Scalar::one(f);
    c.differential.set_block(1, std::move(d));
    return c;
}

ChainComplex acyclic3(const FieldSpec& f) {
    ChainComplex c;
    c.field = f;
    c.dims = {{0, 1}, {1, 2}, {2, 1}};
    Matrix d2(f, 2, 1);
    d2.at(0, 0) = Scalar::one(f);
    d2.at(1, 0) = -Scalar::one(f);
    c.differential.set_block(2, std::move(d2));
    Matrix d1(f, 1, 2);
    d1.at(0, 0) = Scalar::one(f);
    d1.at(0, 1) = Scalar::one(f);
    c.differential.set_block(1, std::move(d1));
    return c;
}

RightModule regular_module(const Algebra& a) {
    RightModule m(a, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix act(a.field(), a.dim(), a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto& prod = a.product(j, i);  // e_j · b_i
            for (std::size_t k = 0; k < a.dim(); ++k) act.at(k, j) = prod[k];
        }
        m.set_action(i, std::move(act));
    }
    return m;
}

std::vector<std::pair<std::string, StrictAction>> module_corpus_actions(const FieldSpec& f) {
    std::vector<std::pair<std::string, StrictAction>> out;
    out.emplace_back("triv_z2_k", trivial_action(group_z2(), algebra_k(f).as_category()));
    out.emplace_back("swap_k2", action_swap_k2(f));
    out.emplace_back("negx_dual", action_negx_dual(f));
    out.emplace_back("inv_kz3", action_inv_kz3(f));
    return out;
}

std::vector<std::pair<std::string, StrictAction>> group_actions(const FieldSpec& f) {
    std::vector<std::pair<std::string, StrictAction>> out;
    out.emplace_back("triv_z2_k", trivial_action(group_z2(), algebra_k(f).as_category()));
    out.emplace_back("triv_z3_k", trivial_action(group_z3(), algebra_k(f).as_category()));
    out.emplace_back("triv_s3_k", trivial_action(group_s3(), algebra_k(f).as_category()));
    out.emplace_back("swap_k2", action_swap_k2(f));
    out.emplace_back("negx_dual", action_negx_dual(f));
    out.emplace_back("inv_kz3", action_inv_kz3(f));
    out.emplace_back("swap_2obj", action_swap_2obj(f));
    out.emplace_back("cycle3", action_cycle3(f));
    out.emplace_back("triv_z2_epsilon", trivial_action(group_z2(), dg_epsilon(f)));
    out.emplace_back("triv_z2_endcone", trivial_action(group_z2(), dg_endcone(f)));
    return out;
}

}  // namespace skewcat::corpus
