#include "nevan/linalg.hpp"

#include <algorithm>

#include "nevan/errors.hpp"

namespace nevan {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(std::move(field), 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::append_row(const Vector& r) {
    if (r.size() != cols_) throw InputError("row length does not match the matrix width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Vector Echelon::reduce(Vector v) const {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Scalar c = v[pivots[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = pivots[i]; j < v.size(); ++j)
            if (!rref(i, j).is_zero()) v[j] = v[j] - c * rref(i, j);
    }
    return v;
}

Echelon row_reduce(const Matrix& input) {
    Matrix a = input;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        const Scalar inv = a(r, c).inv();
        for (std::size_t j = c; j < cols; ++j)
            if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix rref(a.field(), 0, cols);
    for (std::size_t i = 0; i < r; ++i) rref.append_row(a.row(i));
    return Echelon{std::move(rref), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vector> nullspace(const Matrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), m.field().zero());
        v[free] = m.field().one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

void check_shape(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.front().size()) throw InputError("ragged polynomial matrix");
}

/// Fraction-free elimination in place; returns the rank. After the call the
/// last pivot equals (up to sign) a maximal nonzero minor.
std::size_t bareiss(PolyMatrix& a, Polynomial* last_pivot, bool* swapped_odd) {
    const std::size_t rows = a.size(), cols = a.front().size();
    const Field& field = a.front().front().field();
    const std::size_t nv = a.front().front().nvars();
    Polynomial prev = Polynomial::constant(field, nv, field.one());
    std::size_t r = 0;
    bool odd = false;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            odd = !odd;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Polynomial v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = exact_div(v, prev);
            }
            a[i][c] = Polynomial(field, nv);
        }
        prev = a[r][c];
        ++r;
    }
    if (last_pivot) *last_pivot = prev;
    if (swapped_odd) *swapped_odd = odd;
    return r;
}

}  // namespace

std::size_t poly_matrix_rank(const PolyMatrix& m, std::mt19937_64* rng) {
    if (m.empty() || m.front().empty()) return 0;
    check_shape(m);
    const std::size_t full = std::min(m.size(), m.front().size());
    if (rng) {
        const Field& field = m.front().front().field();
        const std::size_t nv = m.front().front().nvars();
        Vector point;
        for (std::size_t i = 0; i < nv; ++i) point.push_back(field.random_element(*rng, 6));
        Matrix ev(field, m.size(), m.front().size());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m[i].size(); ++j) ev(i, j) = m[i][j].evaluate(point);
        if (rank(ev) == full) return full;
    }
    PolyMatrix a = m;
    return bareiss(a, nullptr, nullptr);
}

Polynomial poly_determinant(const PolyMatrix& m) {
    if (m.empty()) throw InputError("determinant of an empty matrix");
    check_shape(m);
    if (m.size() != m.front().size()) throw InputError("determinant of a non-square matrix");
    PolyMatrix a = m;
    Polynomial last(m.front().front().field(), m.front().front().nvars());
    bool odd = false;
    if (bareiss(a, &last, &odd) < m.size()) return Polynomial(m.front().front().field(), m.front().front().nvars());
    return odd ? -last : last;
}

}  // namespace nevan
