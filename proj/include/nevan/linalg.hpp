#pragma once

// Exact linear algebra: dense matrices over the coefficient field, and rank /
// determinant of matrices with polynomial entries over the rational-function
// field, by fraction-free (Bareiss) elimination.

#include <random>
#include <vector>

#include "nevan/polynomial.hpp"

namespace nevan {

using Vector = std::vector<Scalar>;

class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Vector row(std::size_t i) const;
    void append_row(const Vector& r);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form. Zero rows are dropped, so rref.rows() == rank.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;  // pivot column of each row, increasing
    std::size_t rank() const noexcept { return pivots.size(); }

    /// Subtract multiples of the rref rows so that v vanishes on every pivot column.
    Vector reduce(Vector v) const;
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Rank over the fraction field of the polynomial ring. When rng is given, the
/// matrix is first evaluated at a random point; a full-rank result there is
/// conclusive, anything less is settled by exact elimination.
std::size_t poly_matrix_rank(const PolyMatrix& m, std::mt19937_64* rng = nullptr);

/// Determinant of a square polynomial matrix.
Polynomial poly_determinant(const PolyMatrix& m);

}  // namespace nevan
