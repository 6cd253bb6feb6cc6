#include "skewcat/groupact.hpp"

#include "skewcat/corpus.hpp"
#include "support/rnd.hpp"

#include <doctest.h>

using namespace skewcat;
using testsupport::test_fields;

TEST_CASE("validate_monoid") {
    SUBCASE("Z/2, Z/3, S3 are valid groups") {
        CHECK(validate_monoid(corpus::group_z2()).ok());
        CHECK(validate_monoid(corpus::group_z3()).ok());
        CHECK(validate_monoid(corpus::group_s3()).ok());
    }
    SUBCASE("the truncation monoid is valid without inverses") {
        FiniteMonoid t3 = corpus::monoid_t3();
        CHECK(validate_monoid(t3).ok());
        CHECK(!t3.has_inverses());
        CHECK_THROWS_AS(t3.inverse(1), NotAGroupError);
    }
    SUBCASE("one corrupted cell yields an associativity witness") {
        FiniteMonoid s3 = corpus::group_s3();
        auto table = s3.table();
        table[1][1] = table[1][1] == 0 ? 1 : 0;  // corrupt r·r
        FiniteMonoid bad(s3.elements(), table, s3.identity(), *s3.inverses());
        Report rep = validate_monoid(bad);
        REQUIRE(!rep.ok());
        bool assoc = false;
        for (const auto& v : rep.violations) assoc |= v.axiom == "associativity";
        CHECK(assoc);
    }
    SUBCASE("every single-cell mutation of the S3 table is rejected") {
        FiniteMonoid s3 = corpus::group_s3();
        int killed = 0, total = 0;
        for (std::size_t g = 0; g < 6; ++g)
            for (std::size_t h = 0; h < 6; ++h)
                for (int delta = 1; delta < 6; ++delta) {
                    auto table = s3.table();
                    table[g][h] = (table[g][h] + delta) % 6;
                    FiniteMonoid bad(s3.elements(), table, s3.identity(), *s3.inverses());
                    ++total;
                    if (!validate_monoid(bad).ok()) ++killed;
                }
        CHECK(total == 180);
        CHECK(killed == total);
    }
}

TEST_CASE("validate_action on the corpus") {
    for (const auto& f : test_fields())
        for (const auto& [name, rho] : corpus::group_actions(f)) {
            INFO(name << " over " << f.str());
            CHECK(validate_action(rho).ok());
        }
    CHECK(validate_action(corpus::action_proj_k2(FieldSpec::rationals())).ok());
}

TEST_CASE("x ↦ -x over F_2 collapses to the trivial action") {
    StrictAction rho = corpus::action_negx_dual(FieldSpec::prime(2));
    CHECK(validate_action(rho).ok());
    CHECK(rho.functor(1) == identity_functor(rho.category));
}

TEST_CASE("broken actions are reported") {
    FieldSpec q = FieldSpec::rationals();
    SUBCASE("rho(e) must be the identity") {
        StrictAction rho = corpus::action_swap_k2(q);
        std::swap(rho.functors[0], rho.functors[1]);
        Report rep = validate_action(rho);
        REQUIRE(!rep.ok());
    }
    SUBCASE("a non-multiplicative family fails action_composition") {
        StrictAction rho = corpus::action_negx_dual(q);
        Matrix bad = Matrix::identity(q, 2);
        bad.at(1, 1) = Scalar::from_int(q, 2);  // x ↦ 2x is an algebra map? no: (2x)² ≠ 0 ok but x²=0 so fine; it breaks σ² = e
        GradedMap m(0);
        m.set_block(0, bad);
        rho.functors[1].set_hom_map(0, 0, m);
        Report rep = validate_action(rho);
        REQUIRE(!rep.ok());
    }
}

TEST_CASE("orbits") {
    FieldSpec q = FieldSpec::rationals();
    SUBCASE("trivial action has singleton orbits") {
        StrictAction rho = corpus::trivial_action(corpus::group_z2(),
                                                  corpus::n_point_category(q, 3));
        Orbits orb = object_orbits(rho);
        CHECK(orb.blocks.size() == 3);
        CHECK(orb.representatives == std::vector<int>{0, 1, 2});
    }
    SUBCASE("the swap has one orbit with representative X") {
        Orbits orb = object_orbits(corpus::action_swap_2obj(q));
        REQUIRE(orb.blocks.size() == 1);
        CHECK(orb.blocks[0] == std::vector<int>{0, 1});
        CHECK(orb.representatives == std::vector<int>{0});
    }
    SUBCASE("the 3-cycle has one orbit") {
        Orbits orb = object_orbits(corpus::action_cycle3(q));
        REQUIRE(orb.blocks.size() == 1);
        CHECK(orb.blocks[0].size() == 3);
    }
    SUBCASE("orbits form a partition closed under the action") {
        for (const auto& [name, rho] : corpus::group_actions(q)) {
            INFO(name);
            Orbits orb = object_orbits(rho);
            std::size_t covered = 0;
            for (std::size_t b = 0; b < orb.blocks.size(); ++b) {
                covered += orb.blocks[b].size();
                for (int x : orb.blocks[b])
                    for (std::size_t g = 0; g < rho.monoid.size(); ++g)
                        CHECK(orb.orbit_of[static_cast<std::size_t>(
                                  rho.act_object(static_cast<int>(g), x))] ==
                              static_cast<int>(b));
            }
            CHECK(covered == rho.category.object_count());
        }
    }
    SUBCASE("monoids without inverses are refused") {
        StrictAction rho = corpus::action_proj_k2(q);
        CHECK_THROWS_AS(object_orbits(rho), NotAGroupError);
        CHECK_THROWS_AS(is_free_on_objects(rho), NotAGroupError);
    }
}

TEST_CASE("is_free_on_objects") {
    FieldSpec q = FieldSpec::rationals();
    SUBCASE("trivial action on one object is not free") {
        StrictAction rho = corpus::trivial_action(corpus::group_z2(),
                                                  corpus::algebra_k(q).as_category());
        Freeness fr = is_free_on_objects(rho);
        CHECK(!fr.free);
        CHECK(fr.witness_element == 1);
        CHECK(fr.witness_object == 0);
    }
    SUBCASE("the swap and the 3-cycle are free") {
        CHECK(is_free_on_objects(corpus::action_swap_2obj(q)).free);
        CHECK(is_free_on_objects(corpus::action_cycle3(q)).free);
    }
}

TEST_CASE("rho(g⁻¹) is the blockwise matrix inverse of rho(g)") {
    for (const auto& f : test_fields())
        for (const auto& [name, rho] : corpus::group_actions(f)) {
            INFO(name << " over " << f.str());
            for (std::size_t g = 0; g < rho.monoid.size(); ++g) {
                int gi = rho.monoid.inverse(static_cast<int>(g));
                for (const auto& [pair, m] : rho.functor(static_cast<int>(g)).hom_maps) {
                    int gx = rho.act_object(static_cast<int>(g), pair.first);
                    int gy = rho.act_object(static_cast<int>(g), pair.second);
                    const GradedMap* back = rho.functor(gi).hom_map(gx, gy);
                    REQUIRE(back != nullptr);
                    for (const auto& [d, blk] : m.blocks()) {
                        auto inv = inverse(blk);
                        REQUIRE(inv.has_value());
                        CHECK(*back->block(d) == *inv);
                    }
                }
            }
        }
}

TEST_CASE("action mutation: every matrix-entry change in the swap action is rejected") {
    for (const auto& f : test_fields()) {
        StrictAction base = corpus::action_swap_k2(f);
        int killed = 0, total = 0;
        for (std::size_t g = 0; g < 2; ++g)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) {
                    StrictAction mutant = base;
                    GradedMap m = mutant.functors[g].hom_maps.at({0, 0});
                    Matrix blk = *m.block(0);
                    blk.at(r, c) += Scalar::one(f);
                    m.set_block(0, blk);
                    mutant.functors[g].set_hom_map(0, 0, m);
                    ++total;
                    if (!validate_action(mutant).ok()) ++killed;
                }
        CHECK(total == 8);
        CHECK(killed == total);
    }
}
