#include "lcadual/matrix.hpp"

#include <algorithm>

namespace lcadual {

DenseMatrix::DenseMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

DenseMatrix DenseMatrix::identity(const Field& field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

DenseMatrix DenseMatrix::from_rows(const Field& field,
                                   const std::vector<std::vector<Scalar>>& rows,
                                   std::size_t cols) {
    DenseMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw UsageError("row length mismatch in from_rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
    if (field_ != other.field_) throw UsageError("matrix field mismatch in product");
    if (cols_ != other.rows_) throw UsageError("matrix dimension mismatch in product");
    DenseMatrix out(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out.at(r, c) += a * other.at(k, c);
        }
    return out;
}

std::vector<Scalar> DenseMatrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw UsageError("vector length mismatch in apply");
    std::vector<Scalar> y(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
    return y;
}

bool DenseMatrix::operator==(const DenseMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
}

DenseMatrix DenseMatrix::rref(std::vector<std::size_t>* pivots) const {
    DenseMatrix m = *this;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t r = pivot_row;
        while (r < rows_ && m.at(r, col).is_zero()) ++r;
        if (r == rows_) continue;
        if (r != pivot_row) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(r, c), m.at(pivot_row, c));
        }
        const Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < cols_; ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t rr = 0; rr < rows_; ++rr) {
            if (rr == pivot_row || m.at(rr, col).is_zero()) continue;
            const Scalar factor = m.at(rr, col);
            for (std::size_t c = col; c < cols_; ++c)
                m.at(rr, c) -= factor * m.at(pivot_row, c);
        }
        if (pivots) pivots->push_back(col);
        ++pivot_row;
    }
    return m;
}

std::size_t DenseMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::vector<std::vector<Scalar>> DenseMatrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    DenseMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[free_col] = Scalar::one(field_);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -r.at(i, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> DenseMatrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw UsageError("right-hand side length mismatch in solve");
    DenseMatrix aug(field_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    std::vector<std::size_t> pivots;
    DenseMatrix red = aug.rref(&pivots);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(cols_, Scalar::zero(field_));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(i, cols_);
    return x;
}

std::optional<std::vector<Scalar>> DenseMatrix::left_annihilator(
    const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw UsageError("vector length mismatch in left_annihilator");
    // Scan the deterministic left-kernel basis for the first functional not
    // orthogonal to b; none exists exactly when b is in the column space.
    for (const auto& phi : transpose().kernel_basis()) {
        Scalar dot = Scalar::zero(field_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (!phi[r].is_zero()) dot += phi[r] * b[r];
        if (!dot.is_zero()) return phi;
    }
    return std::nullopt;
}

std::vector<std::vector<Scalar>> canonical_span(const Field& field,
                                                const std::vector<std::vector<Scalar>>& vectors,
                                                std::size_t ambient_dim) {
    DenseMatrix m = DenseMatrix::from_rows(field, vectors, ambient_dim);
    std::vector<std::size_t> pivots;
    DenseMatrix r = m.rref(&pivots);
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Scalar> row(ambient_dim, Scalar::zero(field));
        for (std::size_t c = 0; c < ambient_dim; ++c) row[c] = r.at(i, c);
        basis.push_back(std::move(row));
    }
    return basis;
}

}  // namespace lcadual
