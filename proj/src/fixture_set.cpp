#include "skewcat/fixture_set.hpp"

#include "skewcat/corpus.hpp"

namespace skewcat {

std::vector<std::pair<std::string, Json>> fixture_documents() {
    using namespace corpus;
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f2 = FieldSpec::prime(2);
    FieldSpec f3 = FieldSpec::prime(3);

    std::vector<std::pair<std::string, Json>> out;
    auto act = [&](const std::string& name, const StrictAction& rho) {
        out.emplace_back(name, action_to_json(rho));
    };

    act("act_triv_z2_k_q.json", trivial_action(group_z2(), algebra_k(q).as_category()));
    act("act_triv_z2_k_f2.json", trivial_action(group_z2(), algebra_k(f2).as_category()));
    act("act_triv_z3_k_q.json", trivial_action(group_z3(), algebra_k(q).as_category()));
    act("act_triv_s3_k_q.json", trivial_action(group_s3(), algebra_k(q).as_category()));
    act("act_swap_k2_q.json", action_swap_k2(q));
    act("act_swap_k2_f3.json", action_swap_k2(f3));
    act("act_negx_dual_q.json", action_negx_dual(q));
    act("act_inv_kz3_f3.json", action_inv_kz3(f3));
    act("act_swap_2obj_q.json", action_swap_2obj(q));
    act("act_cycle3_q.json", action_cycle3(q));
    act("act_proj_k2_q.json", action_proj_k2(q));
    act("act_triv_z2_endcone_q.json", trivial_action(group_z2(), dg_endcone(q)));

    out.emplace_back("cx_point_q.json", complex_to_json(point_complex(q, 0)));
    out.emplace_back("cx_point_f2.json", complex_to_json(point_complex(f2, 0)));
    out.emplace_back("cx_cone_q.json", complex_to_json(cone_id(q)));

    // the regular module over the skew algebra of the trivial Z/2 action on k
    {
        StrictAction rho = trivial_action(group_z2(), algebra_k(q).as_category());
        Algebra ag = skew_group_algebra(rho);
        out.emplace_back("mod_reg_kz2_q.json", module_to_json(regular_module(ag)));
    }

    // one-dimensional equivariant modules over k with u_s = ±1
    {
        StrictAction rho = trivial_action(group_z2(), algebra_k(q).as_category());
        RightModule base(algebra_k(q), 1);
        base.set_action(0, Matrix::identity(q, 1));
        EquivariantModule triv(base, {Matrix::identity(q, 1), Matrix::identity(q, 1)});
        EquivariantModule sign(
            base, {Matrix::identity(q, 1), Matrix::identity(q, 1).scaled(-Scalar::one(q))});
        out.emplace_back("eq_triv_k_q.json",
                         equivariant_to_json(triv, rho.monoid, true, &rho));
        out.emplace_back("eq_sign_k_q.json",
                         equivariant_to_json(sign, rho.monoid, true, &rho));
    }

    // corrupted composition constant: (E12 ▷ E21) picks up a spurious E22 term
    {
        DgCategory m2 = algebra_m2(q).as_category();
        m2.add_comp_entry(0, 0, 0, 0, 1, 0, 2, 3, Scalar::one(q));
        out.emplace_back("bad_assoc_m2_q.json", dgcat_to_json(m2));
    }

    // swap action with a corrupted functor matrix
    {
        StrictAction rho = action_swap_k2(q);
        GradedMap m = rho.functors[1].hom_maps.at({0, 0});
        Matrix blk = *m.block(0);
        blk.at(1, 1) = Scalar::one(q);
        m.set_block(0, blk);
        rho.functors[1].set_hom_map(0, 0, m);
        out.emplace_back("bad_action_q.json", action_to_json(rho));
    }

    return out;
}

std::vector<std::pair<std::string, std::string>> fixture_raw_files() {
    return {{"bad_syntax.json", "{ this is not JSON\n"}};
}

}  // namespace skewcat
