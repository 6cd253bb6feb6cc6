#pragma once

#include "skewcat/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace skewcat {

/* Dense matrix over a single field, row-major. Maps are matrices acting on
 * column vectors from the left: a map V -> W is a (dim W) x (dim V) matrix. */
class Matrix {
public:
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

    static Matrix identity(const FieldSpec& field, std::size_t n);
    static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    // field-checked assignment
    void set(std::size_t r, std::size_t c, const Scalar& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;
    Matrix transpose() const;

    // column access used when matrices hold stacked vectors
    std::vector<Scalar> column(std::size_t c) const;
    std::vector<Scalar> row_vec(std::size_t r) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // matrix * column vector

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column indices, ascending
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// columns span ker(m); exactly cols - rank of them
Matrix kernel_basis(const Matrix& m);

// some x with m*x = rhs, or nullopt when the system is inconsistent
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

std::optional<Matrix> inverse(const Matrix& m);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace skewcat
