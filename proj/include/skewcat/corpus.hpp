#pragma once

#include "skewcat/equivmod.hpp"

namespace skewcat::corpus {

/* The in-repo example corpus: the small groups, algebras, dg-categories and
 * actions that anchor the golden tests and ship as JSON fixtures. */

FiniteMonoid group_z2();
FiniteMonoid group_z3();
FiniteMonoid group_s3();
FiniteMonoid monoid_t3();        // {e, t, t²} with t absorbing past t²
FiniteMonoid monoid_idem();      // {e, t} with t² = t

Algebra algebra_k(const FieldSpec& f);
Algebra algebra_k2(const FieldSpec& f);      // k ⊕ k, basis p, q
Algebra algebra_dual(const FieldSpec& f);    // k[x]/x²
Algebra algebra_m2(const FieldSpec& f);      // 2x2 matrix algebra
Algebra group_algebra(const FieldSpec& f, const FiniteMonoid& g);

// one-object dg-algebra k[ε], |ε| = 1, ε▷ε = 0, dε = 1
DgCategory dg_epsilon(const FieldSpec& f);
// endomorphism dg-algebra of the acyclic two-term complex k → k
DgCategory dg_endcone(const FieldSpec& f);
// two one-dimensional objects with zero homs between them
DgCategory two_point_category(const FieldSpec& f);
DgCategory n_point_category(const FieldSpec& f, int n);

StrictAction trivial_action(const FiniteMonoid& m, const DgCategory& c);
StrictAction action_swap_k2(const FieldSpec& f);     // Z/2 swaps the factors of k ⊕ k
StrictAction action_negx_dual(const FieldSpec& f);   // Z/2 by x ↦ -x on k[x]/x²
StrictAction action_inv_kz3(const FieldSpec& f);     // Z/2 inverts the group in kZ/3
StrictAction action_swap_2obj(const FieldSpec& f);   // Z/2 swaps two objects (free)
StrictAction action_cycle3(const FieldSpec& f);      // Z/3 cycles three objects (free)
StrictAction action_proj_k2(const FieldSpec& f);     // idempotent monoid on k ⊕ k

ChainComplex point_complex(const FieldSpec& f, int degree = 0);
ChainComplex cone_id(const FieldSpec& f);    // acyclic k → k in degrees 1, 0
ChainComplex acyclic3(const FieldSpec& f);   // acyclic 0 → k → k² → k → 0

RightModule regular_module(const Algebra& a);

// every group action of the corpus over this field, with a short name
std::vector<std::pair<std::string, StrictAction>> group_actions(const FieldSpec& f);

// the four algebra actions the module-equivalence checks run over:
// k with trivial Z/2, k⊕k with the swap, k[x]/x² with x ↦ -x, kZ/3 inverted by Z/2
std::vector<std::pair<std::string, StrictAction>> module_corpus_actions(const FieldSpec& f);

}  // namespace skewcat::corpus
