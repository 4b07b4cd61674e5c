#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpacm/field.hpp"

namespace mpacm {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
};

/// In-place Gauss-Jordan reduction to reduced row echelon form.
/// Pivot rule: first nonzero entry in column order (deterministic).
/// Returns the pivot columns; rank = pivots.size().
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && is_zero(m.at(pr, c))) ++pr;
        if (pr == m.rows()) continue;
        m.swap_rows(r, pr);
        F inv = F(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            F f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Fraction-free (Bareiss) forward elimination rank for rational matrices.
/// Rows are scaled to integers first; all intermediate divisions are exact.
inline std::size_t bareiss_rank(const Matrix<Rat>& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class v = m.at(i, j).get_num() * (lcm / m.at(i, j).get_den());
            a[i][j] = v;
        }
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, Rat>) {
        return bareiss_rank(m);
    } else {
        Matrix<F> copy = m;
        return rref_in_place(copy).size();
    }
}

/// Basis of the right null space, parameterized from the RREF: one vector per
/// free column, with a 1 in the free slot.  Deterministic given the entries.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
    Matrix<F> red = m;
    std::vector<std::size_t> pivots = rref_in_place(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[fc] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -red.at(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incremental row-space builder; keeps a forward-reduced echelon set.
template <class F>
class SpanBuilder {
public:
    /// Returns true if the row enlarged the span.
    bool add(std::vector<F> row) {
        for (const auto& [pc, prow] : rows_) {
            if (is_zero(row[pc])) continue;
            F f = row[pc];
            for (std::size_t j = pc; j < row.size(); ++j)
                row[j] = row[j] - f * prow[j];
        }
        std::size_t lead = 0;
        while (lead < row.size() && is_zero(row[lead])) ++lead;
        if (lead == row.size()) return false;
        F inv = F(1) / row[lead];
        for (std::size_t j = lead; j < row.size(); ++j) row[j] = row[j] * inv;
        rows_.emplace_back(lead, std::move(row));
        // keep pivot order sorted so later reductions terminate in one pass
        for (std::size_t i = rows_.size(); i-- > 1 && rows_[i].first < rows_[i - 1].first;)
            std::swap(rows_[i], rows_[i - 1]);
        return true;
    }

    bool contains(std::vector<F> row) const {
        for (const auto& [pc, prow] : rows_) {
            if (is_zero(row[pc])) continue;
            F f = row[pc];
            for (std::size_t j = pc; j < row.size(); ++j)
                row[j] = row[j] - f * prow[j];
        }
        for (const F& x : row)
            if (!is_zero(x)) return false;
        return true;
    }

    std::size_t dim() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, std::vector<F>>> rows_;
};

template <class F>
std::size_t span_dim(const std::vector<std::vector<F>>& vecs) {
    SpanBuilder<F> sb;
    for (const auto& v : vecs) sb.add(v);
    return sb.dim();
}

/// True iff v lies in the span of basis.
template <class F>
bool in_span(const std::vector<F>& v, const std::vector<std::vector<F>>& basis) {
    for (const auto& b : basis)
        if (b.size() != v.size())
            throw std::invalid_argument("in_span: mismatched vector lengths");
    SpanBuilder<F> sb;
    for (const auto& b : basis) sb.add(b);
    return sb.contains(v);
}

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
    Matrix<F> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

}  // namespace mpacm
