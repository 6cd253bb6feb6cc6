#pragma once

#include "skewcat/graded.hpp"

#include <random>

namespace skewcat::testsupport {

inline std::vector<FieldSpec> test_fields() {
    return {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
}

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.kind == FieldSpec::Kind::prime_field) {
        std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic - 1);
        return Scalar::from_residue(f, d(rng));
    }
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    return Scalar::from_int(f, num(rng)) / Scalar::from_int(f, den(rng));
}

inline Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(f, rng);
    return m;
}

/* Random valid complex on a small degree range: the top differential is free,
 * lower ones are sampled from the solution space of d∘d = 0. */
inline ChainComplex random_complex(const FieldSpec& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim_dist(0, 3);
    std::uniform_int_distribution<int> lo_dist(-2, 1);
    ChainComplex c;
    c.field = f;
    int lo = lo_dist(rng);
    std::vector<std::pair<int, std::size_t>> degs;
    for (int d = lo; d < lo + 4; ++d) {
        int n = dim_dist(rng);
        if (n > 0) {
            c.dims[d] = static_cast<std::size_t>(n);
            degs.emplace_back(d, static_cast<std::size_t>(n));
        }
    }
    const Matrix* above = nullptr;  // differential leaving the degree above
    for (auto it = c.dims.rbegin(); it != c.dims.rend(); ++it) {
        int d = it->first;
        std::size_t cols = it->second;
        std::size_t rows = dim_at(c.dims, d - 1);
        if (rows == 0) {
            above = nullptr;
            continue;
        }
        Matrix blk(f, rows, cols);
        if (above == nullptr || above->is_zero()) {
            blk = random_matrix(f, rows, cols, rng);
        } else {
            // rows of blk must annihilate the columns of `above`
            Matrix k = kernel_basis(above->transpose());
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t kc = 0; kc < k.cols(); ++kc) {
                    Scalar coeff = random_scalar(f, rng);
                    if (coeff.is_zero()) continue;
                    for (std::size_t cc = 0; cc < cols; ++cc)
                        blk.at(r, cc) += coeff * k.at(cc, kc);
                }
        }
        c.differential.set_block(d, blk);
        const Matrix* stored = c.differential.block(d);
        above = stored;
    }
    return c;
}

}  // namespace skewcat::testsupport
