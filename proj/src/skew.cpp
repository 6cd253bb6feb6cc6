#include "skewcat/skew.hpp"

namespace skewcat {

namespace {

void require_valid_action(const StrictAction& rho) {
    Report rep = validate_action(rho);
    if (!rep.ok()) throw PreconditionError("invalid action: " + rep.summary());
}

}  // namespace

std::size_t skew_summand_offset(const StrictAction& rho, int x, int y, int g, int degree) {
    std::size_t off = 0;
    for (int h = 0; h < g; ++h)
        off += rho.category.hom_dim_at(x, rho.act_object(h, y), degree);
    return off;
}

SkewResult skew_group_dg_category(const StrictAction& rho) {
    require_valid_action(rho);
    const DgCategory& a = rho.category;
    const FiniteMonoid& mon = rho.monoid;
    const FieldSpec& f = a.field();
    int n_obj = static_cast<int>(a.object_count());
    int n_grp = static_cast<int>(mon.size());
    int e = mon.identity();

    DgCategory s(f);
    for (int x = 0; x < n_obj; ++x) s.add_object(a.object_name(x));

    // hom complexes: for each pair, the g-summands in declaration order
    for (int x = 0; x < n_obj; ++x)
        for (int y = 0; y < n_obj; ++y) {
            HomData h;
            h.complex.field = f;
            GradedDims total;
            for (int g = 0; g < n_grp; ++g) {
                const HomData* ha = a.hom(x, rho.act_object(g, y));
                if (ha == nullptr) continue;
                for (const auto& [d, dim] : ha->complex.dims) {
                    for (std::size_t i = 0; i < dim; ++i)
                        h.basis[d].push_back(mon.element_name(g) + "|" +
                                             ha->basis.at(d).at(i));
                    total[d] += dim;
                }
            }
            if (total.empty()) continue;
            h.complex.dims = total;
            // block-diagonal differential over the summands
            for (const auto& [d, dim] : total) {
                std::size_t rows = dim_at(total, d - 1);
                if (rows == 0) continue;
                Matrix blk(f, rows, dim);
                bool nonzero = false;
                for (int g = 0; g < n_grp; ++g) {
                    const HomData* ha = a.hom(x, rho.act_object(g, y));
                    if (ha == nullptr) continue;
                    const Matrix* da = ha->complex.differential.block(d);
                    if (da == nullptr) continue;
                    std::size_t ro = skew_summand_offset(rho, x, y, g, d - 1);
                    std::size_t co = skew_summand_offset(rho, x, y, g, d);
                    for (std::size_t r = 0; r < da->rows(); ++r)
                        for (std::size_t c = 0; c < da->cols(); ++c)
                            if (!da->at(r, c).is_zero()) {
                                blk.at(ro + r, co + c) = da->at(r, c);
                                nonzero = true;
                            }
                }
                if (nonzero) h.complex.differential.set_block(d, std::move(blk));
            }
            s.set_hom(x, y, std::move(h));
        }

    // composition: (g₁,a)▷(g₂,b) = (g₁g₂, a ▷ (g₁.b))
    for (int x = 0; x < n_obj; ++x)
        for (int y = 0; y < n_obj; ++y)
            for (int z = 0; z < n_obj; ++z)
                for (int g1 = 0; g1 < n_grp; ++g1) {
                    int g1y = rho.act_object(g1, y);
                    const HomData* hxy = a.hom(x, g1y);
                    if (hxy == nullptr) continue;
                    for (int g2 = 0; g2 < n_grp; ++g2) {
                        int g2z = rho.act_object(g2, z);
                        const HomData* hyz = a.hom(y, g2z);
                        if (hyz == nullptr) continue;
                        int g12 = mon.mul(g1, g2);
                        int g12z = rho.act_object(g12, z);
                        for (const auto& [p, np] : hxy->complex.dims)
                            for (const auto& [q, nq] : hyz->complex.dims)
                                for (std::size_t i = 0; i < np; ++i)
                                    for (std::size_t j = 0; j < nq; ++j) {
                                        Element tb = rho.act(g1, y, g2z,
                                                             element_basis(f, q, j, nq));
                                        Element prod = a.compose(
                                            x, g1y, g12z,
                                            element_basis(f, p, i, np), tb);
                                        auto it = prod.comps.find(p + q);
                                        if (it == prod.comps.end()) continue;
                                        std::size_t ro =
                                            skew_summand_offset(rho, x, z, g12, p + q);
                                        std::size_t li =
                                            skew_summand_offset(rho, x, y, g1, p) + i;
                                        std::size_t rj =
                                            skew_summand_offset(rho, y, z, g2, q) + j;
                                        for (std::size_t k = 0; k < it->second.size(); ++k)
                                            if (!it->second[k].is_zero())
                                                s.add_comp_entry(x, y, z, p, li, q, rj,
                                                                 ro + k, it->second[k]);
                                    }
                    }
                }

    // units (e, id_X)
    for (int x = 0; x < n_obj; ++x) {
        const Element& ua = a.unit(x);
        std::vector<Scalar> v(s.hom_dim_at(x, x, 0), Scalar::zero(f));
        std::size_t off = skew_summand_offset(rho, x, x, e, 0);
        auto it = ua.comps.find(0);
        if (it != ua.comps.end())
            for (std::size_t i = 0; i < it->second.size(); ++i) v[off + i] = it->second[i];
        s.set_unit(x, element_from_vector(0, std::move(v)));
    }

    // F_A: inclusion of the e-summands
    DgFunctor embed;
    embed.object_map.resize(static_cast<std::size_t>(n_obj));
    for (int x = 0; x < n_obj; ++x) embed.object_map[static_cast<std::size_t>(x)] = x;
    for (int x = 0; x < n_obj; ++x)
        for (int y = 0; y < n_obj; ++y) {
            const HomData* ha = a.hom(x, y);  // e acts as the identity on objects
            if (ha == nullptr) continue;
            GradedMap m(0);
            for (const auto& [d, dim] : ha->complex.dims) {
                Matrix blk(f, s.hom_dim_at(x, y, d), dim);
                std::size_t off = skew_summand_offset(rho, x, y, e, d);
                for (std::size_t i = 0; i < dim; ++i) blk.at(off + i, i) = Scalar::one(f);
                m.set_block(d, std::move(blk));
            }
            embed.set_hom_map(x, y, std::move(m));
        }

    SkewResult out{std::move(s), std::move(embed), std::nullopt};

    if (mon.has_inverses()) {
        StrictAction induced{mon, out.category, {}};
        for (int h = 0; h < n_grp; ++h) {
            int hi = mon.inverse(h);
            DgFunctor fh;
            fh.object_map.resize(static_cast<std::size_t>(n_obj));
            for (int x = 0; x < n_obj; ++x)
                fh.object_map[static_cast<std::size_t>(x)] = rho.act_object(h, x);
            for (int x = 0; x < n_obj; ++x)
                for (int y = 0; y < n_obj; ++y) {
                    int hx = rho.act_object(h, x), hy = rho.act_object(h, y);
                    GradedMap m(0);
                    GradedDims src_dims = out.category.hom_dims(x, y);
                    for (const auto& [d, dim] : src_dims) {
                        std::size_t rows = out.category.hom_dim_at(hx, hy, d);
                        if (rows == 0) continue;
                        Matrix blk(f, rows, dim);
                        for (int g = 0; g < n_grp; ++g) {
                            int gy = rho.act_object(g, y);
                            const HomData* ha = a.hom(x, gy);
                            if (ha == nullptr) continue;
                            std::size_t ncols = dim_at(ha->complex.dims, d);
                            if (ncols == 0) continue;
                            int hghi = mon.mul(mon.mul(h, g), hi);
                            std::size_t co = skew_summand_offset(rho, x, y, g, d);
                            std::size_t ro = skew_summand_offset(rho, hx, hy, hghi, d);
                            // h.a for each basis a of hom_A(x, g.y)_d
                            for (std::size_t i = 0; i < ncols; ++i) {
                                Element img = rho.act(h, x, gy,
                                                      element_basis(f, d, i, ncols));
                                auto itc = img.comps.find(d);
                                if (itc == img.comps.end()) continue;
                                for (std::size_t r = 0; r < itc->second.size(); ++r)
                                    if (!itc->second[r].is_zero())
                                        blk.at(ro + r, co + i) = itc->second[r];
                            }
                        }
                        m.set_block(d, std::move(blk));
                    }
                    fh.set_hom_map(x, y, std::move(m));
                }
            induced.functors.push_back(std::move(fh));
        }
        out.induced_action = std::move(induced);
    }
    return out;
}

Algebra skew_group_algebra(const StrictAction& rho) {
    require_valid_action(rho);
    auto alg = Algebra::from_category(rho.category);
    if (!alg)
        throw PreconditionError(
            "skew group algebra needs a one-object target concentrated in degree 0 with zero "
            "differential");
    const Algebra& a = *alg;
    const FiniteMonoid& mon = rho.monoid;
    const FieldSpec& f = a.field();
    std::size_t na = a.dim();
    int n_grp = static_cast<int>(mon.size());

    std::vector<std::string> basis;
    basis.reserve(static_cast<std::size_t>(n_grp) * na);
    for (int g = 0; g < n_grp; ++g)
        for (std::size_t i = 0; i < na; ++i)
            basis.push_back(mon.element_name(g) + "|" + a.basis()[i]);

    Algebra out(f, std::move(basis));
    auto slot = [&](int g, std::size_t i) { return static_cast<std::size_t>(g) * na + i; };

    for (int g1 = 0; g1 < n_grp; ++g1) {
        // columns of a ↦ g1.a on the algebra basis
        std::vector<std::vector<Scalar>> acted(na);
        for (std::size_t j = 0; j < na; ++j) {
            Element img = rho.act(g1, 0, 0, element_basis(f, 0, j, na));
            auto it = img.comps.find(0);
            acted[j] = it != img.comps.end() ? it->second
                                             : std::vector<Scalar>(na, Scalar::zero(f));
        }
        for (int g2 = 0; g2 < n_grp; ++g2) {
            int g12 = mon.mul(g1, g2);
            for (std::size_t i = 0; i < na; ++i) {
                std::vector<Scalar> ei(na, Scalar::zero(f));
                ei[i] = Scalar::one(f);
                for (std::size_t j = 0; j < na; ++j) {
                    std::vector<Scalar> prod = a.multiply(ei, acted[j]);
                    std::vector<Scalar> full(static_cast<std::size_t>(n_grp) * na,
                                             Scalar::zero(f));
                    for (std::size_t k = 0; k < na; ++k) full[slot(g12, k)] = prod[k];
                    out.set_product(slot(g1, i), slot(g2, j), std::move(full));
                }
            }
        }
    }
    std::vector<Scalar> u(static_cast<std::size_t>(n_grp) * na, Scalar::zero(f));
    for (std::size_t k = 0; k < na; ++k) u[slot(mon.identity(), k)] = a.unit()[k];
    out.set_unit(std::move(u));
    return out;
}

ReduceResult reduce(const StrictAction& rho, const SkewResult& skew,
                    std::optional<std::vector<int>> representatives) {
    Orbits orb = object_orbits(rho);
    std::vector<int> reps;
    if (representatives) {
        reps = *representatives;
        std::vector<int> hit(orb.blocks.size(), 0);
        for (int r : reps) {
            if (r < 0 || static_cast<std::size_t>(r) >= rho.category.object_count())
                throw PreconditionError("representative index out of range");
            ++hit[static_cast<std::size_t>(orb.orbit_of[static_cast<std::size_t>(r)])];
        }
        for (std::size_t b = 0; b < hit.size(); ++b) {
            if (hit[b] == 0)
                throw PreconditionError(
                    "orbit of " + rho.category.object_name(orb.representatives[b]) +
                    " has no representative");
            if (hit[b] > 1)
                throw PreconditionError(
                    "orbit of " + rho.category.object_name(orb.representatives[b]) +
                    " has more than one representative");
        }
    } else {
        reps = orb.representatives;
    }

    const DgCategory& s = skew.category;
    DgCategory red(s.field());
    std::vector<int> new_index(s.object_count(), -1);
    for (int r : reps) {
        int nx = red.add_object(s.object_name(r));
        new_index[static_cast<std::size_t>(r)] = nx;
    }
    for (std::size_t ia = 0; ia < reps.size(); ++ia)
        for (std::size_t ib = 0; ib < reps.size(); ++ib) {
            const HomData* h = s.hom(reps[ia], reps[ib]);
            if (h != nullptr) red.set_hom(static_cast<int>(ia), static_cast<int>(ib), *h);
        }
    for (const auto& [key, blk] : s.comp_blocks()) {
        auto [x, y, z, p, q] = key;
        int nx = new_index[static_cast<std::size_t>(x)];
        int ny = new_index[static_cast<std::size_t>(y)];
        int nz = new_index[static_cast<std::size_t>(z)];
        if (nx < 0 || ny < 0 || nz < 0) continue;
        red.set_comp_block(nx, ny, nz, p, q, blk);
    }
    for (std::size_t ia = 0; ia < reps.size(); ++ia)
        red.set_unit(static_cast<int>(ia), s.unit(reps[ia]));

    DgFunctor incl;
    incl.object_map.assign(reps.begin(), reps.end());
    for (std::size_t ia = 0; ia < reps.size(); ++ia)
        for (std::size_t ib = 0; ib < reps.size(); ++ib) {
            const HomData* h = red.hom(static_cast<int>(ia), static_cast<int>(ib));
            if (h == nullptr) continue;
            GradedMap m(0);
            for (const auto& [d, dim] : h->complex.dims)
                m.set_block(d, Matrix::identity(s.field(), dim));
            incl.set_hom_map(static_cast<int>(ia), static_cast<int>(ib), std::move(m));
        }

    return ReduceResult{std::move(red), std::move(incl), std::move(reps)};
}

FreeifyResult freeify(const StrictAction& rho) {
    require_valid_action(rho);
    Orbits orb = object_orbits(rho);
    const DgCategory& a = rho.category;
    const FiniteMonoid& mon = rho.monoid;
    int n_grp = static_cast<int>(mon.size());

    DgCategory ap(a.field());
    std::vector<std::pair<int, int>> pairs;  // (representative object, group element)
    for (int r : orb.representatives)
        for (int g = 0; g < n_grp; ++g) {
            ap.add_object("(" + a.object_name(r) + "," + mon.element_name(g) + ")");
            pairs.emplace_back(r, g);
        }
    auto src_object = [&](std::size_t i) {
        return rho.act_object(pairs[i].second, pairs[i].first);  // g.x
    };

    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const HomData* h = a.hom(src_object(i), src_object(j));
            if (h != nullptr) ap.set_hom(static_cast<int>(i), static_cast<int>(j), *h);
        }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j)
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                int x = src_object(i), y = src_object(j), z = src_object(k);
                const HomData* hxy = a.hom(x, y);
                const HomData* hyz = a.hom(y, z);
                if (hxy == nullptr || hyz == nullptr) continue;
                for (const auto& [p, np] : hxy->complex.dims)
                    for (const auto& [q, nq] : hyz->complex.dims) {
                        const CompBlock* blk = a.comp_block(x, y, z, p, q);
                        if (blk != nullptr)
                            ap.set_comp_block(static_cast<int>(i), static_cast<int>(j),
                                              static_cast<int>(k), p, q, *blk);
                    }
            }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        ap.set_unit(static_cast<int>(i), a.unit(src_object(i)));

    // h.(x,g) = (x,hg), acting on hom complexes exactly as ρ(h) does in A
    auto pair_index = [&](int rep, int g) -> int {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == rep && pairs[i].second == g) return static_cast<int>(i);
        throw Error("freeify: object pair lookup failed");
    };
    StrictAction action{mon, ap, {}};
    for (int h = 0; h < n_grp; ++h) {
        DgFunctor fh;
        fh.object_map.resize(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i)
            fh.object_map[i] = pair_index(pairs[i].first, mon.mul(h, pairs[i].second));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                const GradedMap* m = rho.functor(h).hom_map(src_object(i), src_object(j));
                if (m != nullptr)
                    fh.set_hom_map(static_cast<int>(i), static_cast<int>(j), *m);
            }
        action.functors.push_back(std::move(fh));
    }

    // π: (x,g) ↦ g.x, identity on the hom complexes
    DgFunctor proj;
    proj.object_map.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        proj.object_map[i] = src_object(i);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const HomData* h = ap.hom(static_cast<int>(i), static_cast<int>(j));
            if (h == nullptr) continue;
            GradedMap m(0);
            for (const auto& [d, dim] : h->complex.dims)
                m.set_block(d, Matrix::identity(a.field(), dim));
            proj.set_hom_map(static_cast<int>(i), static_cast<int>(j), std::move(m));
        }

    return FreeifyResult{std::move(action), std::move(proj), std::move(pairs)};
}

Report check_trivial_induced_action(const StrictAction& rho) {
    Freeness fr = is_free_on_objects(rho);
    if (!fr.free)
        throw PreconditionError("the action must be free on the set of objects; " +
                                rho.monoid.element_name(fr.witness_element) + " fixes " +
                                rho.category.object_name(fr.witness_object));

    SkewResult skew = skew_group_dg_category(rho);
    const StrictAction& induced = *skew.induced_action;
    const DgCategory& s = skew.category;
    const FieldSpec& f = s.field();
    Orbits orb = object_orbits(rho);
    const FiniteMonoid& mon = rho.monoid;
    int n_grp = static_cast<int>(mon.size());

    Report rep;
    // (g, unit-vector) as an element of hom_S(x̃, ỹ), for g with g.y known
    auto unit_in_summand = [&](int x, int y, int g) {
        const Element& u = rho.category.unit(rho.act_object(g, y));
        std::vector<Scalar> v(s.hom_dim_at(x, y, 0), Scalar::zero(f));
        std::size_t off = skew_summand_offset(rho, x, y, g, 0);
        auto it = u.comps.find(0);
        if (it != u.comps.end())
            for (std::size_t i = 0; i < it->second.size(); ++i) v[off + i] = it->second[i];
        return element_from_vector(0, std::move(v));
    };

    for (int h = 0; h < n_grp; ++h) {
        if (h == mon.identity()) continue;
        int hi = mon.inverse(h);
        for (int x : orb.representatives)
            for (int y : orb.representatives) {
                GradedDims dims = s.hom_dims(x, y);
                if (dims.empty()) continue;
                int hx = rho.act_object(h, x), hy = rho.act_object(h, y);
                // X̃ --(h⁻¹, id)--> (h.X)~ and (h.Y)~ --(h, id)--> Ỹ
                Element into = unit_in_summand(x, hx, hi);
                Element back = unit_in_summand(hy, y, h);
                for (const auto& [d, dim] : dims)
                    for (std::size_t i = 0; i < dim; ++i) {
                        Element base = element_basis(f, d, i, dim);
                        Element mid = apply_functor(induced.functor(h), x, y, base);
                        Element comp = s.compose(x, hx, hy, into, mid);
                        comp = s.compose(x, hy, y, comp, back);
                        if (comp != base)
                            rep.add("trivial_induced", mon.element_name(h) + " moves " +
                                                           s.describe_basis(x, y, d, i));
                    }
            }
    }
    return rep;
}

Report equivariance_of_embedding(const SkewResult& skew, const StrictAction& rho) {
    if (!skew.induced_action)
        throw NotAGroupError("equivariance check needs a group action");
    const StrictAction& induced = *skew.induced_action;
    const DgCategory& a = rho.category;
    int n_obj = static_cast<int>(a.object_count());
    int n_grp = static_cast<int>(rho.monoid.size());

    Report rep;
    for (int h = 0; h < n_grp; ++h) {
        for (int x = 0; x < n_obj; ++x)
            if (skew.embedding.map_object(rho.act_object(h, x)) !=
                induced.functor(h).map_object(skew.embedding.map_object(x)))
                rep.add("equivariance_objects",
                        rho.monoid.element_name(h) + " at " + a.object_name(x));
        for (int x = 0; x < n_obj; ++x)
            for (int y = 0; y < n_obj; ++y) {
                const HomData* hom = a.hom(x, y);
                if (hom == nullptr) continue;
                int hx = rho.act_object(h, x), hy = rho.act_object(h, y);
                for (const auto& [d, dim] : hom->complex.dims)
                    for (std::size_t i = 0; i < dim; ++i) {
                        Element base = element_basis(a.field(), d, i, dim);
                        Element lhs =
                            apply_functor(skew.embedding, hx, hy, rho.act(h, x, y, base));
                        Element rhs = apply_functor(induced.functor(h), x, y,
                                                    apply_functor(skew.embedding, x, y, base));
                        if (lhs != rhs)
                            rep.add("equivariance_morphisms",
                                    rho.monoid.element_name(h) + " at " +
                                        a.describe_basis(x, y, d, i));
                    }
            }
    }
    return rep;
}

}  // namespace skewcat
