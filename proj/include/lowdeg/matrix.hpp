#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lowdeg/scalar.hpp"

namespace lowdeg {

/// Dense row-major matrix over a single field.
class Matrix {
public:
    /// Zero matrix.
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    /// Throws FieldMismatch if any entry lies outside `f`, DomainError on a size mismatch.
    Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_integers(const Field& f, const std::vector<std::vector<long long>>& rows);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v);
    std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(std::span<const Scalar> v) const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Row rank. Fraction-free (Bareiss) elimination over Q, plain elimination over GF(p);
/// pivots are the first nonzero entry in column order.
std::size_t rank(const Matrix& m);

/// cols - rank.
std::size_t kernel_dim(const Matrix& m);

/// Basis of {x : M x = 0}, one vector per free column of the reduced echelon form.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Inverse of a square matrix; throws DomainError when singular.
Matrix inverse(const Matrix& m);

/// Incrementally maintained row echelon basis, for rank-stabilization loops.
class EchelonBasis {
public:
    EchelonBasis(const Field& f, std::size_t cols);

    /// Adds a row; returns true when the rank increased.
    bool add(std::span<const Scalar> row);
    /// True when `row` lies in the span of the rows added so far.
    bool contains(std::span<const Scalar> row) const;
    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

private:
    Field field_;
    std::size_t cols_;
    bool add_modp(std::span<const Scalar> row);

    std::vector<std::vector<Scalar>> rows_;  // normalized so the pivot entry is 1
    std::vector<std::vector<std::uint64_t>> prows_;  // same, for prime fields
    std::vector<std::size_t> pivots_;
};

}  // namespace lowdeg
