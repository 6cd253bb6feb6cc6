#include "skewcat/orbit.hpp"

namespace skewcat {

ChainComplex shift_complex(const ChainComplex& k, int n) {
    ChainComplex out;
    out.field = k.field;
    for (const auto& [d, dim] : k.dims) out.dims[d + n] = dim;
    Scalar sign = Scalar::from_int(k.field, n % 2 == 0 ? 1 : -1);
    for (const auto& [d, blk] : k.differential.blocks())
        out.differential.set_block(d + n, blk.scaled(sign));
    return out;
}

namespace {

struct HomBasisIndex {
    // flat index of the pair (source degree i, source s, target r) within Hom_d
    std::size_t operator()(int i, std::size_t s, std::size_t r) const {
        std::size_t off = 0;
        for (const auto& [deg, pair] : layout)
            if (deg < i)
                off += pair.first * pair.second;
            else
                break;
        auto it = layout.find(i);
        return off + s * it->second.second + r;
    }
    // source degree -> (dim K_i, dim L_{i+d})
    std::map<int, std::pair<std::size_t, std::size_t>> layout;
    std::size_t total = 0;
};

HomBasisIndex hom_layout(const ChainComplex& k, const ChainComplex& l, int d) {
    HomBasisIndex idx;
    for (const auto& [i, nk] : k.dims) {
        std::size_t nl = dim_at(l.dims, i + d);
        if (nl == 0) continue;
        idx.layout[i] = {nk, nl};
        idx.total += nk * nl;
    }
    return idx;
}

}  // namespace

ChainComplex hom_complex(const ChainComplex& k, const ChainComplex& l) {
    if (k.field != l.field) throw FieldMismatchError("hom complex across fields");
    ChainComplex out;
    out.field = k.field;
    if (k.dims.empty() || l.dims.empty()) return out;

    int k_min = k.dims.begin()->first, k_max = k.dims.rbegin()->first;
    int l_min = l.dims.begin()->first, l_max = l.dims.rbegin()->first;
    int d_min = l_min - k_max, d_max = l_max - k_min;

    std::map<int, HomBasisIndex> layouts;
    for (int d = d_min; d <= d_max; ++d) {
        HomBasisIndex idx = hom_layout(k, l, d);
        if (idx.total > 0) {
            out.dims[d] = idx.total;
            layouts.emplace(d, std::move(idx));
        }
    }

    // D(f) = d_L ∘ f - (-1)^{|f|} f ∘ d_K on the matrix-unit basis
    for (const auto& [d, src] : layouts) {
        auto tgt_it = layouts.find(d - 1);
        if (tgt_it == layouts.end()) continue;
        const HomBasisIndex& tgt = tgt_it->second;
        Matrix blk(k.field, tgt.total, src.total);
        Scalar sign = Scalar::from_int(k.field, d % 2 == 0 ? -1 : 1);  // -(-1)^d
        for (const auto& [i, pair] : src.layout) {
            auto [nk, nl] = pair;
            const Matrix* dl = l.differential.block(i + d);
            const Matrix* dk = k.differential.block(i + 1);
            for (std::size_t s = 0; s < nk; ++s)
                for (std::size_t r = 0; r < nl; ++r) {
                    std::size_t col = src(i, s, r);
                    if (dl != nullptr && tgt.layout.count(i))
                        for (std::size_t rp = 0; rp < dl->rows(); ++rp)
                            if (!dl->at(rp, r).is_zero())
                                blk.at(tgt(i, s, rp), col) += dl->at(rp, r);
                    if (dk != nullptr && tgt.layout.count(i + 1))
                        for (std::size_t t = 0; t < dk->cols(); ++t)
                            if (!dk->at(s, t).is_zero())
                                blk.at(tgt(i + 1, t, r), col) += sign * dk->at(s, t);
                }
        }
        out.differential.set_block(d, std::move(blk));
    }
    return out;
}

GradedDims orbit_hom_dims(const OrbitHomQuery& q) {
    if (q.period == 0) throw PreconditionError("orbit period must be nonzero");
    {
        Report rk = validate_complex(q.source), rl = validate_complex(q.target);
        if (!rk.ok()) throw InvalidComplexError("orbit source: " + rk.summary());
        if (!rl.ok()) throw InvalidComplexError("orbit target: " + rl.summary());
    }
    GradedDims out;
    if (q.source.dims.empty() || q.target.dims.empty() || q.window_lo > q.window_hi) return out;

    int k_min = q.source.dims.begin()->first, k_max = q.source.dims.rbegin()->first;
    int l_min = q.target.dims.begin()->first, l_max = q.target.dims.rbegin()->first;
    // hom(K, L[m]) can only be nonzero in degrees [l_min + m - k_max, l_max + m - k_min]
    int m_lo = q.window_lo - (l_max - k_min);
    int m_hi = q.window_hi - (l_min - k_max);
    for (int m = m_lo; m <= m_hi; ++m) {
        if (m % q.period != 0) continue;
        GradedDims h = homology(hom_complex(q.source, shift_complex(q.target, m)));
        for (const auto& [d, dim] : h)
            if (d >= q.window_lo && d <= q.window_hi) out[d] += dim;
    }
    return out;
}

GradedDims laurent_dims(int n, int window_lo, int window_hi) {
    if (n == 0) throw PreconditionError("Laurent pattern needs a nonzero period");
    GradedDims out;
    for (int d = window_lo; d <= window_hi; ++d)
        if (d % n == 0) out[d] = 1;
    return out;
}

GradedMap shift_graded_map(const GradedMap& g, int n) {
    GradedMap out(g.shift());
    for (const auto& [d, blk] : g.blocks()) out.set_block(d + n, blk);
    return out;
}

OrbitComponent orbit_compose(const OrbitComponent& f, const OrbitComponent& g, int period) {
    if (period == 0) throw PreconditionError("orbit period must be nonzero");
    long long shift_amount = static_cast<long long>(period) * f.index;
    GradedMap shifted = shift_graded_map(g.map, static_cast<int>(shift_amount));
    return OrbitComponent{f.index + g.index, compose_graded(shifted, f.map)};
}

}  // namespace skewcat
