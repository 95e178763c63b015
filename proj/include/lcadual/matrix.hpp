#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lcadual/field.hpp"

namespace lcadual {

/// Dense matrix over an exact field, with plain Gaussian elimination.
///
/// Pivot choice is deterministic (first nonzero entry, scanning columns
/// left-to-right and rows top-to-bottom), so echelon forms, kernel bases and
/// every witness derived from them are byte-stable across runs.
class DenseMatrix {
public:
    DenseMatrix(const Field& field, std::size_t rows, std::size_t cols);
    static DenseMatrix identity(const Field& field, std::size_t n);
    static DenseMatrix from_rows(const Field& field,
                                 const std::vector<std::vector<Scalar>>& rows,
                                 std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    DenseMatrix transpose() const;
    DenseMatrix operator*(const DenseMatrix& other) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
    bool operator==(const DenseMatrix& other) const;

    /// Reduced row echelon form; pivot column indices appended to `pivots`.
    DenseMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    std::size_t rank() const;

    /// Deterministic basis of the right null space (one vector per free
    /// column, free columns in ascending order). Empty iff injective.
    std::vector<std::vector<Scalar>> kernel_basis() const;

    /// Some x with M x = b, or nullopt iff b is outside the column space.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    /// A functional phi with phi M = 0 and phi b != 0, or nullopt iff b lies
    /// in the column space. Exactly one of solve/left_annihilator succeeds.
    std::optional<std::vector<Scalar>> left_annihilator(const std::vector<Scalar>& b) const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Canonical basis (nonzero RREF rows) of the span of the given vectors.
/// Two sets of vectors span the same subspace iff this output is identical.
std::vector<std::vector<Scalar>> canonical_span(const Field& field,
                                                const std::vector<std::vector<Scalar>>& vectors,
                                                std::size_t ambient_dim);

}  // namespace lcadual
