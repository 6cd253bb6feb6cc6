#include "skewcat/graded.hpp"

namespace skewcat {

std::size_t dim_at(const GradedDims& dims, int degree) {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
}

long long euler_characteristic(const GradedDims& dims) {
    long long chi = 0;
    for (const auto& [d, n] : dims) {
        long long term = static_cast<long long>(n);
        chi += (d % 2 == 0) ? term : -term;
    }
    return chi;
}

GradedDims add_dims(const GradedDims& a, const GradedDims& b) {
    GradedDims out = a;
    for (const auto& [d, n] : b) {
        out[d] += n;
        if (out[d] == 0) out.erase(d);
    }
    return out;
}

void GradedMap::set_block(int degree, Matrix m) {
    if (m.is_zero()) {
        blocks_.erase(degree);
        return;
    }
    blocks_.insert_or_assign(degree, std::move(m));
}

const Matrix* GradedMap::block(int degree) const {
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? nullptr : &it->second;
}

GradedMap compose_graded(const GradedMap& f, const GradedMap& g) {
    GradedMap out(f.shift() + g.shift());
    for (const auto& [d, gb] : g.blocks()) {
        const Matrix* fb = f.block(d + g.shift());
        if (fb == nullptr) continue;
        out.set_block(d, *fb * gb);  // throws ShapeError when incompatible
    }
    return out;
}

GradedMap graded_map_sum(const GradedMap& a, const GradedMap& b) {
    if (a.shift() != b.shift()) throw ShapeError("graded map sum: shifts differ");
    GradedMap out(a.shift());
    for (const auto& [d, blk] : a.blocks()) {
        const Matrix* other = b.block(d);
        out.set_block(d, other ? blk + *other : blk);
    }
    for (const auto& [d, blk] : b.blocks())
        if (a.block(d) == nullptr) out.set_block(d, blk);
    return out;
}

GradedMap graded_map_scaled(const GradedMap& a, const Scalar& s) {
    GradedMap out(a.shift());
    for (const auto& [d, blk] : a.blocks()) out.set_block(d, blk.scaled(s));
    return out;
}

Report validate_complex(const ChainComplex& c) {
    Report rep;
    if (c.differential.shift() != -1)
        rep.add("differential_shift",
                "shift is " + std::to_string(c.differential.shift()) + ", expected -1");
    for (const auto& [d, n] : c.dims)
        if (n == 0) rep.add("zero_dim_stored", "degree " + std::to_string(d));
    for (const auto& [d, blk] : c.differential.blocks()) {
        if (blk.field() != c.field)
            rep.add("field_mismatch", "differential block at degree " + std::to_string(d));
        if (blk.cols() != dim_at(c.dims, d) || blk.rows() != dim_at(c.dims, d - 1))
            rep.add("shape", "differential block at degree " + std::to_string(d) + " is " +
                                 std::to_string(blk.rows()) + "x" + std::to_string(blk.cols()) +
                                 ", dims want " + std::to_string(dim_at(c.dims, d - 1)) + "x" +
                                 std::to_string(dim_at(c.dims, d)));
    }
    if (!rep.ok()) return rep;
    for (const auto& [d, blk] : c.differential.blocks()) {
        const Matrix* next = c.differential.block(d + 1);
        if (next == nullptr) continue;
        if (!(blk * *next).is_zero())
            rep.add("d_squared", "d∘d ≠ 0 from degree " + std::to_string(d + 1));
    }
    return rep;
}

GradedDims homology(const ChainComplex& c) {
    Report rep = validate_complex(c);
    if (!rep.ok()) throw InvalidComplexError("invalid chain complex: " + rep.summary());
    GradedDims h;
    for (const auto& [d, n] : c.dims) {
        const Matrix* out_blk = c.differential.block(d);
        const Matrix* in_blk = c.differential.block(d + 1);
        std::size_t ker = n - (out_blk ? rank(*out_blk) : 0);
        std::size_t im = in_blk ? rank(*in_blk) : 0;
        if (ker > im) h[d] = ker - im;
    }
    return h;
}

}  // namespace skewcat
