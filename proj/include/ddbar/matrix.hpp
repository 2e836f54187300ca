#pragma once

#include <cstddef>
#include <vector>

#include "ddbar/cyclotomic.hpp"

namespace ddbar {

/*
 * Dense matrices over Q(zeta_N). Shapes with zero rows or columns are legal
 * everywhere (rank 0, full kernel), which keeps the degenerate bidegrees of a
 * bicomplex free of special cases.
 */
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), order_(1) {}
    Matrix(size_t rows, size_t cols, unsigned order);

    static Matrix identity(size_t k, unsigned order);
    static Matrix from_columns(size_t rows, unsigned order,
                               const std::vector<std::vector<Cyclotomic>>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    unsigned order() const { return order_; }

    const Cyclotomic& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    Cyclotomic& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

    std::vector<Cyclotomic> column(size_t j) const;

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix scaled(const Cyclotomic& c) const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    /// Rows of this on top of rows of other (same column count).
    Matrix vstack(const Matrix& other) const;
    /// Columns of this followed by columns of other (same row count).
    Matrix hstack(const Matrix& other) const;

    /// Exact rank by fraction-free Bareiss elimination with full pivoting;
    /// pivots are chosen by a Markowitz-style sparsity score so intermediate
    /// entries stay small, deterministically tie-broken by position.
    size_t rank() const;

    /// Kernel basis as columns, from the reduced row echelon form with
    /// first-nonzero pivoting: one vector per free column, ascending, each
    /// with a 1 in its free coordinate. Deterministic.
    Matrix kernel() const;

    /// Solves this * X = rhs exactly (free variables set to 0); throws
    /// std::logic_error when the system is inconsistent.
    Matrix solve(const Matrix& rhs) const;

private:
    void check_same_shape(const Matrix& rhs) const;

    size_t rows_, cols_;
    unsigned order_;
    std::vector<Cyclotomic> a_;
};

/// Basis of the quotient span(candidates) / span(modulus) drawn from the
/// candidate columns: feeds modulus columns, then candidate columns, through
/// incremental elimination and keeps the candidates that introduce new
/// pivots, inter-reduced and normalized to pivot coefficient 1. Candidates
/// are expected to contain a spanning set modulo the modulus (e.g. a kernel
/// basis against an image). Deterministic in input order.
Matrix quotient_basis(const Matrix& candidates, const Matrix& modulus);

/// rank([modulus | candidates]) - rank(modulus): how many candidate columns
/// stay independent modulo the modulus. Same elimination as quotient_basis
/// without materializing the reduced basis.
size_t independent_count(const Matrix& candidates, const Matrix& modulus);

}  // namespace ddbar
