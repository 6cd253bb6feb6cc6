#include "skewcat/matrix.hpp"

namespace skewcat {

namespace {

void check_uniform_field(const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c).field() != m.field())
                throw FieldMismatchError("matrix entry (" + std::to_string(r) + "," +
                                         std::to_string(c) + ") has field " +
                                         m.at(r, c).field().str() + ", matrix has " +
                                         m.field().str());
}

}  // namespace

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw ShapeError("ragged rows in matrix literal");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.field() != field_)
        throw FieldMismatchError("assigning " + v.field().str() + " entry into " + field_.str() +
                                 " matrix");
    entries_[r * cols_ + c] = v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError("matrix product across fields");
    if (cols_ != o.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError("matrix sum across fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

std::vector<Scalar> Matrix::row_vec(std::size_t r) const {
    std::vector<Scalar> v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw ShapeError("matrix apply shape mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

RrefResult rref(const Matrix& m) {
    check_uniform_field(m);
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        // swap rows sel <-> lead
        if (sel != lead)
            for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(sel, c), r.at(lead, c));
        Scalar inv = r.at(lead, col).inverse();
        for (std::size_t c = col; c < r.cols(); ++c) r.at(lead, c) *= inv;
        for (std::size_t row = 0; row < r.rows(); ++row) {
            if (row == lead || r.at(row, col).is_zero()) continue;
            Scalar factor = r.at(row, col);
            for (std::size_t c = col; c < r.cols(); ++c)
                r.at(row, c) -= factor * r.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    auto rr = rref(m);
    const Matrix& r = rr.reduced;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(m.field(), m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(fc, k) = Scalar::one(m.field());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            basis.at(rr.pivots[i], k) = -r.at(i, fc);
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
    if (m.field() != rhs.field()) throw FieldMismatchError("solve across fields");
    if (m.rows() != rhs.rows()) throw ShapeError("solve: row counts differ");
    auto rr = rref(hstack(m, rhs));
    for (auto p : rr.pivots)
        if (p >= m.cols()) return std::nullopt;  // pivot in the rhs block: inconsistent
    Matrix x(m.field(), m.cols(), rhs.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.at(rr.pivots[i], j) = rr.reduced.at(i, m.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatchError("hstack across fields");
    if (a.rows() != b.rows()) throw ShapeError("hstack: row counts differ");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatchError("vstack across fields");
    if (a.cols() != b.cols()) throw ShapeError("vstack: column counts differ");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

}  // namespace skewcat
