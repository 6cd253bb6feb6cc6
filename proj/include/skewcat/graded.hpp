#pragma once

#include "skewcat/matrix.hpp"
#include "skewcat/report.hpp"

#include <map>

namespace skewcat {

/* Finitely supported degree -> dimension table; zero dimensions are never stored. */
using GradedDims = std::map<int, std::size_t>;

std::size_t dim_at(const GradedDims& dims, int degree);
long long euler_characteristic(const GradedDims& dims);
GradedDims add_dims(const GradedDims& a, const GradedDims& b);

/* A graded linear map of some degree shift: the block at source degree d maps
 * the degree-d piece to the degree-(d + shift) piece. All-zero blocks are not
 * stored, so "missing block" always means the zero map. */
class GradedMap {
public:
    explicit GradedMap(int shift = 0) : shift_(shift) {}

    int shift() const { return shift_; }
    const std::map<int, Matrix>& blocks() const { return blocks_; }

    void set_block(int degree, Matrix m);            // drops all-zero blocks
    const Matrix* block(int degree) const;           // nullptr = zero
    bool is_zero() const { return blocks_.empty(); }

    bool operator==(const GradedMap& o) const { return shift_ == o.shift_ && blocks_ == o.blocks_; }
    bool operator!=(const GradedMap& o) const { return !(*this == o); }

private:
    int shift_;
    std::map<int, Matrix> blocks_;
};

// f after g (apply g first); shifts add, blocks multiply with the degree offset
GradedMap compose_graded(const GradedMap& f, const GradedMap& g);

GradedMap graded_map_sum(const GradedMap& a, const GradedMap& b);
GradedMap graded_map_scaled(const GradedMap& a, const Scalar& s);

/* A chain complex in homological grading: the differential has shift -1. */
struct ChainComplex {
    FieldSpec field;
    GradedDims dims;
    GradedMap differential{-1};

    bool operator==(const ChainComplex&) const = default;
};

// shape coherence and d∘d = 0; violations are reported, not thrown
Report validate_complex(const ChainComplex& c);

// H_d = dim ker(d_d) - rank(d_{d+1}); throws InvalidComplexError when the complex is invalid
GradedDims homology(const ChainComplex& c);

}  // namespace skewcat
