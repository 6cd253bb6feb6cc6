#include "skewcat/dgcat.hpp"

#include <algorithm>
#include <set>

namespace skewcat {

Element element_zero() { return Element{}; }

Element element_basis(const FieldSpec& f, int degree, std::size_t index, std::size_t dim) {
    if (index >= dim) throw ShapeError("basis index out of range");
    std::vector<Scalar> v(dim, Scalar::zero(f));
    v[index] = Scalar::one(f);
    Element e;
    e.comps.emplace(degree, std::move(v));
    return e;
}

Element element_from_vector(int degree, std::vector<Scalar> coeffs) {
    bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
    Element e;
    if (!zero) e.comps.emplace(degree, std::move(coeffs));
    return e;
}

namespace {

void accumulate(Element& into, int degree, const std::vector<Scalar>& v) {
    auto it = into.comps.find(degree);
    if (it == into.comps.end()) {
        into.comps.emplace(degree, v);
        return;
    }
    if (it->second.size() != v.size()) throw ShapeError("element component size mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
}

void normalize(Element& e) {
    for (auto it = e.comps.begin(); it != e.comps.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(),
                                [](const Scalar& s) { return s.is_zero(); });
        it = zero ? e.comps.erase(it) : std::next(it);
    }
}

}  // namespace

Element element_add(const Element& a, const Element& b) {
    Element out = a;
    for (const auto& [d, v] : b.comps) accumulate(out, d, v);
    normalize(out);
    return out;
}

Element element_scaled(const Element& a, const Scalar& s) {
    if (s.is_zero()) return element_zero();
    Element out = a;
    for (auto& [d, v] : out.comps)
        for (auto& c : v) c *= s;
    normalize(out);
    return out;
}

Element element_negated(const Element& a) {
    Element out = a;
    for (auto& [d, v] : out.comps)
        for (auto& c : v) c = -c;
    return out;
}

Element apply_graded_map(const GradedMap& f, const Element& a) {
    Element out;
    for (const auto& [d, v] : a.comps) {
        const Matrix* blk = f.block(d);
        if (blk == nullptr) continue;
        accumulate(out, d + f.shift(), blk->apply(v));
    }
    normalize(out);
    return out;
}

bool CompBlock::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
}

int DgCategory::add_object(std::string name) {
    objects_.push_back(std::move(name));
    return static_cast<int>(objects_.size()) - 1;
}

std::optional<int> DgCategory::object_index(std::string_view name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

void DgCategory::set_hom(int x, int y, HomData data) {
    if (data.complex.dims.empty() && data.complex.differential.is_zero()) {
        homs_.erase({x, y});
        return;
    }
    homs_.insert_or_assign({x, y}, std::move(data));
}

const HomData* DgCategory::hom(int x, int y) const {
    auto it = homs_.find({x, y});
    return it == homs_.end() ? nullptr : &it->second;
}

GradedDims DgCategory::hom_dims(int x, int y) const {
    const HomData* h = hom(x, y);
    return h ? h->complex.dims : GradedDims{};
}

std::size_t DgCategory::hom_dim_at(int x, int y, int degree) const {
    const HomData* h = hom(x, y);
    return h ? dim_at(h->complex.dims, degree) : 0;
}

void DgCategory::set_comp_block(int x, int y, int z, int p, int q, CompBlock blk) {
    CompKey key{x, y, z, p, q};
    if (blk.is_zero()) {
        comp_.erase(key);
        return;
    }
    comp_.insert_or_assign(key, std::move(blk));
}

const CompBlock* DgCategory::comp_block(int x, int y, int z, int p, int q) const {
    auto it = comp_.find(CompKey{x, y, z, p, q});
    return it == comp_.end() ? nullptr : &it->second;
}

void DgCategory::add_comp_entry(int x, int y, int z, int p, std::size_t i, int q, std::size_t j,
                                std::size_t k, const Scalar& c) {
    CompKey key{x, y, z, p, q};
    auto it = comp_.find(key);
    if (it == comp_.end()) {
        CompBlock blk(field_, hom_dim_at(x, y, p), hom_dim_at(y, z, q),
                      hom_dim_at(x, z, p + q));
        it = comp_.emplace(key, std::move(blk)).first;
    }
    CompBlock& blk = it->second;
    if (i >= blk.left_dim() || j >= blk.right_dim() || k >= blk.out_dim())
        throw ShapeError("composition entry index out of range");
    blk.at(i, j, k) = c;
}

void DgCategory::set_unit(int x, Element e) {
    normalize(e);
    units_.insert_or_assign(x, std::move(e));
}

const Element& DgCategory::unit(int x) const {
    static const Element none{};
    auto it = units_.find(x);
    return it == units_.end() ? none : it->second;
}

Element DgCategory::compose(int x, int y, int z, const Element& a, const Element& b) const {
    Element out;
    for (const auto& [p, av] : a.comps) {
        if (av.size() != hom_dim_at(x, y, p))
            throw ShapeError("compose: left component size mismatch at degree " +
                             std::to_string(p));
        for (const auto& [q, bv] : b.comps) {
            if (bv.size() != hom_dim_at(y, z, q))
                throw ShapeError("compose: right component size mismatch at degree " +
                                 std::to_string(q));
            const CompBlock* blk = comp_block(x, y, z, p, q);
            if (blk == nullptr) continue;
            std::vector<Scalar> acc(blk->out_dim(), Scalar::zero(field_));
            bool touched = false;
            for (std::size_t i = 0; i < av.size(); ++i) {
                if (av[i].is_zero()) continue;
                for (std::size_t j = 0; j < bv.size(); ++j) {
                    if (bv[j].is_zero()) continue;
                    Scalar coeff = av[i] * bv[j];
                    for (std::size_t k = 0; k < blk->out_dim(); ++k) {
                        const Scalar& c = blk->at(i, j, k);
                        if (!c.is_zero()) {
                            acc[k] += coeff * c;
                            touched = true;
                        }
                    }
                }
            }
            if (touched) accumulate(out, p + q, acc);
        }
    }
    normalize(out);
    return out;
}

Element DgCategory::compose_basis(int x, int y, int z, int p, std::size_t i, int q,
                                  std::size_t j) const {
    const CompBlock* blk = comp_block(x, y, z, p, q);
    if (blk == nullptr) return element_zero();
    std::vector<Scalar> v(blk->out_dim(), Scalar::zero(field_));
    for (std::size_t k = 0; k < blk->out_dim(); ++k) v[k] = blk->at(i, j, k);
    return element_from_vector(p + q, std::move(v));
}

Element DgCategory::differential(int x, int y, const Element& a) const {
    const HomData* h = hom(x, y);
    if (h == nullptr) return element_zero();
    return apply_graded_map(h->complex.differential, a);
}

const std::string& DgCategory::basis_name(int x, int y, int degree, std::size_t i) const {
    const HomData* h = hom(x, y);
    if (h == nullptr) throw ShapeError("basis_name on zero hom");
    return h->basis.at(degree).at(i);
}

std::optional<std::pair<int, std::size_t>> DgCategory::find_basis(int x, int y,
                                                                  std::string_view label) const {
    const HomData* h = hom(x, y);
    if (h == nullptr) return std::nullopt;
    for (const auto& [d, names] : h->basis)
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == label) return std::make_pair(d, i);
    return std::nullopt;
}

std::string DgCategory::describe_basis(int x, int y, int degree, std::size_t i) const {
    return object_name(x) + "|" + object_name(y) + ":" + basis_name(x, y, degree, i) + "@" +
           std::to_string(degree);
}

const GradedMap* DgFunctor::hom_map(int x, int y) const {
    auto it = hom_maps.find({x, y});
    return it == hom_maps.end() ? nullptr : &it->second;
}

void DgFunctor::set_hom_map(int x, int y, GradedMap m) {
    if (m.is_zero()) {
        hom_maps.erase({x, y});
        return;
    }
    hom_maps.insert_or_assign({x, y}, std::move(m));
}

DgFunctor identity_functor(const DgCategory& a) {
    DgFunctor f;
    f.object_map.resize(a.object_count());
    for (std::size_t i = 0; i < a.object_count(); ++i) f.object_map[i] = static_cast<int>(i);
    for (const auto& [pair, h] : a.homs()) {
        GradedMap m(0);
        for (const auto& [d, n] : h.complex.dims) m.set_block(d, Matrix::identity(a.field(), n));
        f.set_hom_map(pair.first, pair.second, std::move(m));
    }
    return f;
}

DgFunctor compose_functors(const DgFunctor& first, const DgFunctor& second) {
    DgFunctor out;
    out.object_map.resize(first.object_map.size());
    for (std::size_t i = 0; i < first.object_map.size(); ++i)
        out.object_map[i] = second.map_object(first.object_map[i]);
    for (const auto& [pair, m1] : first.hom_maps) {
        const GradedMap* m2 =
            second.hom_map(first.map_object(pair.first), first.map_object(pair.second));
        if (m2 == nullptr) continue;
        out.set_hom_map(pair.first, pair.second, compose_graded(*m2, m1));
    }
    return out;
}

Element apply_functor(const DgFunctor& f, int x, int y, const Element& a) {
    const GradedMap* m = f.hom_map(x, y);
    if (m == nullptr) return element_zero();
    return apply_graded_map(*m, a);
}

namespace {

// structural phase of the category validator: shapes, fields, bases, complexes
Report validate_dg_structure(const DgCategory& a) {
    Report rep;
    int n = static_cast<int>(a.object_count());
    for (const auto& [pair, h] : a.homs()) {
        auto [x, y] = pair;
        std::string where = a.object_name(x) + "|" + a.object_name(y);
        if (h.complex.field != a.field()) rep.add("field_mismatch", "hom " + where);
        rep.absorb(validate_complex(h.complex), "hom(" + where + ").");
        std::set<std::string> seen;
        for (const auto& [d, names] : h.basis) {
            if (names.size() != dim_at(h.complex.dims, d))
                rep.add("basis_size", where + " degree " + std::to_string(d));
            for (const auto& nm : names)
                if (!seen.insert(nm).second) rep.add("basis_label_clash", where + ":" + nm);
        }
        for (const auto& [d, dim] : h.complex.dims)
            if (h.basis.find(d) == h.basis.end())
                rep.add("basis_missing", where + " degree " + std::to_string(d));
    }
    for (const auto& [key, blk] : a.comp_blocks()) {
        auto [x, y, z, p, q] = key;
        std::string where = a.object_name(x) + "|" + a.object_name(y) + "|" + a.object_name(z) +
                            " degrees (" + std::to_string(p) + "," + std::to_string(q) + ")";
        if (blk.left_dim() != a.hom_dim_at(x, y, p) || blk.right_dim() != a.hom_dim_at(y, z, q) ||
            blk.out_dim() != a.hom_dim_at(x, z, p + q))
            rep.add("composition_shape", where);
        auto bad_field = [&]() {
            for (std::size_t i = 0; i < blk.left_dim(); ++i)
                for (std::size_t j = 0; j < blk.right_dim(); ++j)
                    for (std::size_t k = 0; k < blk.out_dim(); ++k)
                        if (blk.at(i, j, k).field() != a.field()) return true;
            return false;
        };
        if (bad_field()) rep.add("field_mismatch", "composition " + where);
    }
    for (int x = 0; x < n; ++x) {
        const Element& u = a.unit(x);
        if (u.is_zero()) {
            rep.add("unit_missing", a.object_name(x));
            continue;
        }
        for (const auto& [d, v] : u.comps) {
            if (d != 0) rep.add("unit_degree", a.object_name(x) + " has a degree " +
                                                   std::to_string(d) + " component");
            if (v.size() != a.hom_dim_at(x, x, d))
                rep.add("unit_shape", a.object_name(x));
            for (const auto& s : v)
                if (s.field() != a.field()) rep.add("field_mismatch", "unit " + a.object_name(x));
        }
    }
    return rep;
}

}  // namespace

Report validate_dg_category(const DgCategory& a) {
    Report rep = validate_dg_structure(a);
    if (!rep.ok()) return rep;

    int n = static_cast<int>(a.object_count());

    // units: d(unit) = 0, unit ▷ b = b, a ▷ unit = a
    for (int x = 0; x < n; ++x) {
        const Element& u = a.unit(x);
        if (!a.differential(x, x, u).is_zero())
            rep.add("unit_cycle", "d(unit) ≠ 0 at " + a.object_name(x));
        for (int z = 0; z < n; ++z) {
            const HomData* h = a.hom(x, z);
            if (h == nullptr) continue;
            for (const auto& [q, dim] : h->complex.dims)
                for (std::size_t j = 0; j < dim; ++j) {
                    Element b = element_basis(a.field(), q, j, dim);
                    if (a.compose(x, x, z, u, b) != b)
                        rep.add("unit_left", a.describe_basis(x, z, q, j));
                }
        }
        for (int w = 0; w < n; ++w) {
            const HomData* h = a.hom(w, x);
            if (h == nullptr) continue;
            for (const auto& [p, dim] : h->complex.dims)
                for (std::size_t i = 0; i < dim; ++i) {
                    Element e = element_basis(a.field(), p, i, dim);
                    if (a.compose(w, x, x, e, u) != e)
                        rep.add("unit_right", a.describe_basis(w, x, p, i));
                }
        }
    }

    // associativity on all basis triples
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const HomData* hxy = a.hom(x, y);
            if (hxy == nullptr) continue;
            for (int z = 0; z < n; ++z) {
                const HomData* hyz = a.hom(y, z);
                if (hyz == nullptr) continue;
                for (int w = 0; w < n; ++w) {
                    const HomData* hzw = a.hom(z, w);
                    if (hzw == nullptr) continue;
                    for (const auto& [p, np] : hxy->complex.dims)
                        for (std::size_t i = 0; i < np; ++i)
                            for (const auto& [q, nq] : hyz->complex.dims)
                                for (std::size_t j = 0; j < nq; ++j) {
                                    Element ab = a.compose_basis(x, y, z, p, i, q, j);
                                    for (const auto& [r, nr] : hzw->complex.dims)
                                        for (std::size_t k = 0; k < nr; ++k) {
                                            Element c = element_basis(a.field(), r, k, nr);
                                            Element bc = a.compose_basis(y, z, w, q, j, r, k);
                                            Element lhs = a.compose(x, z, w, ab, c);
                                            Element bcut = a.compose(
                                                x, y, w,
                                                element_basis(a.field(), p, i, np), bc);
                                            if (lhs != bcut)
                                                rep.add("associativity",
                                                        a.describe_basis(x, y, p, i) + " , " +
                                                            a.describe_basis(y, z, q, j) + " , " +
                                                            a.describe_basis(z, w, r, k));
                                        }
                                }
                }
            }
        }

    // Leibniz: d(a ▷ b) = d(a) ▷ b + (-1)^{|a|} a ▷ d(b)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const HomData* hxy = a.hom(x, y);
            if (hxy == nullptr) continue;
            for (int z = 0; z < n; ++z) {
                const HomData* hyz = a.hom(y, z);
                if (hyz == nullptr) continue;
                for (const auto& [p, np] : hxy->complex.dims)
                    for (std::size_t i = 0; i < np; ++i) {
                        Element ea = element_basis(a.field(), p, i, np);
                        Element da = a.differential(x, y, ea);
                        Scalar sign = Scalar::from_int(a.field(), p % 2 == 0 ? 1 : -1);
                        for (const auto& [q, nq] : hyz->complex.dims)
                            for (std::size_t j = 0; j < nq; ++j) {
                                Element eb = element_basis(a.field(), q, j, nq);
                                Element lhs =
                                    a.differential(x, z, a.compose_basis(x, y, z, p, i, q, j));
                                Element rhs = element_add(
                                    a.compose(x, y, z, da, eb),
                                    element_scaled(a.compose(x, y, z, ea,
                                                             a.differential(y, z, eb)),
                                                   sign));
                                if (lhs != rhs)
                                    rep.add("leibniz", a.describe_basis(x, y, p, i) + " , " +
                                                           a.describe_basis(y, z, q, j));
                            }
                    }
            }
        }

    return rep;
}

Report validate_dg_functor(const DgFunctor& f, const DgCategory& a, const DgCategory& b) {
    Report rep;
    int n = static_cast<int>(a.object_count());
    if (f.object_map.size() != a.object_count()) {
        rep.add("object_map_size", std::to_string(f.object_map.size()) + " entries for " +
                                       std::to_string(a.object_count()) + " objects");
        return rep;
    }
    for (int x = 0; x < n; ++x)
        if (f.map_object(x) < 0 || f.map_object(x) >= static_cast<int>(b.object_count())) {
            rep.add("object_map_range", a.object_name(x));
            return rep;
        }

    // shapes of the hom maps
    for (const auto& [pair, m] : f.hom_maps) {
        auto [x, y] = pair;
        std::string where = a.object_name(x) + "|" + a.object_name(y);
        if (m.shift() != 0) rep.add("hom_map_shift", where);
        int fx = f.map_object(x), fy = f.map_object(y);
        for (const auto& [d, blk] : m.blocks()) {
            if (blk.field() != b.field()) rep.add("field_mismatch", where);
            if (blk.cols() != a.hom_dim_at(x, y, d) || blk.rows() != b.hom_dim_at(fx, fy, d))
                rep.add("hom_map_shape", where + " degree " + std::to_string(d));
        }
    }
    if (!rep.ok()) return rep;

    // units
    for (int x = 0; x < n; ++x)
        if (apply_functor(f, x, x, a.unit(x)) != b.unit(f.map_object(x)))
            rep.add("functor_unit", a.object_name(x));

    // differentials: F ∘ d_A = d_B ∘ F per hom pair
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const HomData* h = a.hom(x, y);
            if (h == nullptr) continue;
            static const GradedMap kZeroShift0{0};
            static const GradedMap kZeroShiftM1{-1};
            const GradedMap* fm = f.hom_map(x, y);
            if (fm == nullptr) fm = &kZeroShift0;
            const HomData* hb = b.hom(f.map_object(x), f.map_object(y));
            const GradedMap* db = hb ? &hb->complex.differential : &kZeroShiftM1;
            if (compose_graded(*fm, h->complex.differential) != compose_graded(*db, *fm))
                rep.add("functor_differential", a.object_name(x) + "|" + a.object_name(y));
        }

    // composition on all basis pairs
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const HomData* hxy = a.hom(x, y);
            if (hxy == nullptr) continue;
            for (int z = 0; z < n; ++z) {
                const HomData* hyz = a.hom(y, z);
                if (hyz == nullptr) continue;
                for (const auto& [p, np] : hxy->complex.dims)
                    for (std::size_t i = 0; i < np; ++i)
                        for (const auto& [q, nq] : hyz->complex.dims)
                            for (std::size_t j = 0; j < nq; ++j) {
                                Element ea = element_basis(a.field(), p, i, np);
                                Element eb = element_basis(a.field(), q, j, nq);
                                Element lhs = apply_functor(f, x, z,
                                                            a.compose(x, y, z, ea, eb));
                                Element rhs = b.compose(
                                    f.map_object(x), f.map_object(y), f.map_object(z),
                                    apply_functor(f, x, y, ea), apply_functor(f, y, z, eb));
                                if (lhs != rhs)
                                    rep.add("functor_composition",
                                            a.describe_basis(x, y, p, i) + " , " +
                                                a.describe_basis(y, z, q, j));
                            }
            }
        }
    return rep;
}

GradedDims hom_homology(const DgCategory& a, int x, int y) {
    const HomData* h = a.hom(x, y);
    if (h == nullptr) return {};
    return homology(h->complex);
}

Algebra::Algebra(FieldSpec field, std::vector<std::string> basis_names)
    : field_(std::move(field)), basis_(std::move(basis_names)) {
    std::size_t n = basis_.size();
    table_.assign(n * n, std::vector<Scalar>(n, Scalar::zero(field_)));
    unit_.assign(n, Scalar::zero(field_));
}

void Algebra::set_product(std::size_t i, std::size_t j, std::vector<Scalar> out) {
    if (out.size() != dim()) throw ShapeError("algebra product vector size mismatch");
    table_[i * dim() + j] = std::move(out);
}

const std::vector<Scalar>& Algebra::product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
}

void Algebra::set_unit(std::vector<Scalar> u) {
    if (u.size() != dim()) throw ShapeError("algebra unit vector size mismatch");
    unit_ = std::move(u);
}

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& u,
                                      const std::vector<Scalar>& v) const {
    if (u.size() != dim() || v.size() != dim()) throw ShapeError("algebra multiply size mismatch");
    std::vector<Scalar> out(dim(), Scalar::zero(field_));
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (v[j].is_zero()) continue;
            Scalar c = u[i] * v[j];
            const auto& prod = product(i, j);
            for (std::size_t k = 0; k < dim(); ++k)
                if (!prod[k].is_zero()) out[k] += c * prod[k];
        }
    }
    return out;
}

Report Algebra::validate() const {
    Report rep;
    std::size_t n = dim();
    auto basis_vec = [&](std::size_t i) {
        std::vector<Scalar> v(n, Scalar::zero(field_));
        v[i] = Scalar::one(field_);
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (multiply(unit_, basis_vec(i)) != basis_vec(i)) rep.add("unit_left", basis_[i]);
        if (multiply(basis_vec(i), unit_) != basis_vec(i)) rep.add("unit_right", basis_[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (multiply(product(i, j), basis_vec(k)) != multiply(basis_vec(i), product(j, k)))
                    rep.add("associativity", basis_[i] + " , " + basis_[j] + " , " + basis_[k]);
    return rep;
}

DgCategory Algebra::as_category(const std::string& object_name) const {
    DgCategory c(field_);
    int obj = c.add_object(object_name);
    std::size_t n = dim();
    if (n > 0) {
        HomData h;
        h.complex.field = field_;
        h.complex.dims[0] = n;
        h.basis[0] = basis_;
        c.set_hom(obj, obj, std::move(h));
        CompBlock blk(field_, n, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) blk.at(i, j, k) = product(i, j)[k];
        c.set_comp_block(obj, obj, obj, 0, 0, std::move(blk));
        c.set_unit(obj, element_from_vector(0, unit_));
    }
    return c;
}

std::optional<Algebra> Algebra::from_category(const DgCategory& c) {
    if (c.object_count() != 1) return std::nullopt;
    const HomData* h = c.hom(0, 0);
    if (h == nullptr) return std::nullopt;
    if (h->complex.dims.size() != 1 || h->complex.dims.begin()->first != 0) return std::nullopt;
    if (!h->complex.differential.is_zero()) return std::nullopt;
    std::size_t n = h->complex.dims.begin()->second;
    const Element& u = c.unit(0);
    if (u.comps.size() != 1 || u.comps.begin()->first != 0) return std::nullopt;

    Algebra alg(c.field(), h->basis.at(0));
    const CompBlock* blk = c.comp_block(0, 0, 0, 0, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> prod(n, Scalar::zero(c.field()));
            if (blk != nullptr)
                for (std::size_t k = 0; k < n; ++k) prod[k] = blk->at(i, j, k);
            alg.set_product(i, j, std::move(prod));
        }
    alg.set_unit(u.comps.begin()->second);
    return alg;
}

}  // namespace skewcat
