#pragma once

#include "skewcat/graded.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace skewcat {

/* An element of a graded hom: degree -> coefficient vector over that degree's
 * basis. All-zero components are dropped, so {} is the zero element. */
struct Element {
    std::map<int, std::vector<Scalar>> comps;

    bool is_zero() const { return comps.empty(); }
    bool operator==(const Element&) const = default;
};

Element element_zero();
Element element_basis(const FieldSpec& f, int degree, std::size_t index, std::size_t dim);
Element element_from_vector(int degree, std::vector<Scalar> coeffs);  // drops if all zero
Element element_add(const Element& a, const Element& b);
Element element_scaled(const Element& a, const Scalar& s);
Element element_negated(const Element& a);
Element apply_graded_map(const GradedMap& f, const Element& a);

/* Hom complex of an object pair, with a basis label per degree per index.
 * Labels are unique within the pair (across degrees). */
struct HomData {
    ChainComplex complex;
    std::map<int, std::vector<std::string>> basis;

    bool operator==(const HomData&) const = default;
};

/* Composition structure constants for one object triple and degree pair:
 * entry (i, j, k) is the coefficient of output basis k in (a_i ▷ b_j). */
class CompBlock {
public:
    CompBlock(const FieldSpec& f, std::size_t na, std::size_t nb, std::size_t nc)
        : na_(na), nb_(nb), nc_(nc), v_(na * nb * nc, Scalar::zero(f)) {}

    std::size_t left_dim() const { return na_; }
    std::size_t right_dim() const { return nb_; }
    std::size_t out_dim() const { return nc_; }

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return v_[(i * nb_ + j) * nc_ + k];
    }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return v_[(i * nb_ + j) * nc_ + k]; }

    bool is_zero() const;
    bool operator==(const CompBlock&) const = default;

private:
    std::size_t na_, nb_, nc_;
    std::vector<Scalar> v_;
};

/* A finite dg-category with explicit bases. Composition is stored
 * diagrammatically: compose(x,y,z, a, b) is "a then b" for a: x -> y and
 * b: y -> z. The differential of each hom complex has shift -1. */
class DgCategory {
public:
    explicit DgCategory(FieldSpec field) : field_(std::move(field)) {}

    const FieldSpec& field() const { return field_; }

    int add_object(std::string name);
    std::size_t object_count() const { return objects_.size(); }
    const std::string& object_name(int x) const { return objects_[static_cast<std::size_t>(x)]; }
    const std::vector<std::string>& objects() const { return objects_; }
    std::optional<int> object_index(std::string_view name) const;

    void set_hom(int x, int y, HomData data);
    const HomData* hom(int x, int y) const;  // nullptr = zero hom complex
    GradedDims hom_dims(int x, int y) const;
    std::size_t hom_dim_at(int x, int y, int degree) const;

    void set_comp_block(int x, int y, int z, int p, int q, CompBlock blk);
    const CompBlock* comp_block(int x, int y, int z, int p, int q) const;
    void add_comp_entry(int x, int y, int z, int p, std::size_t i, int q, std::size_t j,
                        std::size_t k, const Scalar& c);

    void set_unit(int x, Element e);
    const Element& unit(int x) const;

    Element compose(int x, int y, int z, const Element& a, const Element& b) const;
    Element compose_basis(int x, int y, int z, int p, std::size_t i, int q, std::size_t j) const;
    Element differential(int x, int y, const Element& a) const;

    const std::string& basis_name(int x, int y, int degree, std::size_t i) const;
    // (degree, index) for a basis label within hom(x, y)
    std::optional<std::pair<int, std::size_t>> find_basis(int x, int y,
                                                          std::string_view label) const;

    std::string describe_basis(int x, int y, int degree, std::size_t i) const;

    bool operator==(const DgCategory&) const = default;

    const std::map<std::pair<int, int>, HomData>& homs() const { return homs_; }
    using CompKey = std::tuple<int, int, int, int, int>;  // x, y, z, p, q
    const std::map<CompKey, CompBlock>& comp_blocks() const { return comp_; }
    const std::map<int, Element>& units() const { return units_; }

private:
    FieldSpec field_;
    std::vector<std::string> objects_;
    std::map<std::pair<int, int>, HomData> homs_;
    std::map<CompKey, CompBlock> comp_;
    std::map<int, Element> units_;
};

/* A dg-functor: object map plus a shift-0 graded map per source hom pair.
 * Missing hom maps are zero. */
struct DgFunctor {
    std::vector<int> object_map;
    std::map<std::pair<int, int>, GradedMap> hom_maps;

    int map_object(int x) const { return object_map[static_cast<std::size_t>(x)]; }
    const GradedMap* hom_map(int x, int y) const;
    void set_hom_map(int x, int y, GradedMap m);  // drops zero maps

    bool operator==(const DgFunctor&) const = default;
};

DgFunctor identity_functor(const DgCategory& a);
// diagrammatic: apply `first`, then `second`
DgFunctor compose_functors(const DgFunctor& first, const DgFunctor& second);
Element apply_functor(const DgFunctor& f, int x, int y, const Element& a);

Report validate_dg_category(const DgCategory& a);
Report validate_dg_functor(const DgFunctor& f, const DgCategory& a, const DgCategory& b);

// homology of the hom complex; throws InvalidComplexError on bad input
GradedDims hom_homology(const DgCategory& a, int x, int y);

/* An ordinary finite-dimensional unital algebra: basis, multiplication
 * constants, unit vector. Equivalent to a one-object dg-category concentrated
 * in degree 0 with zero differential, and convertible both ways. */
class Algebra {
public:
    Algebra(FieldSpec field, std::vector<std::string> basis_names);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }

    void set_product(std::size_t i, std::size_t j, std::vector<Scalar> out);
    const std::vector<Scalar>& product(std::size_t i, std::size_t j) const;
    void set_unit(std::vector<Scalar> u);
    const std::vector<Scalar>& unit() const { return unit_; }

    std::vector<Scalar> multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

    // direct table-based axiom check (independent of validate_dg_category)
    Report validate() const;

    DgCategory as_category(const std::string& object_name = "*") const;
    static std::optional<Algebra> from_category(const DgCategory& c);

    bool operator==(const Algebra&) const = default;

private:
    FieldSpec field_;
    std::vector<std::string> basis_;
    std::vector<std::vector<Scalar>> table_;  // (i * dim + j) -> coefficient vector
    std::vector<Scalar> unit_;
};

}  // namespace skewcat
