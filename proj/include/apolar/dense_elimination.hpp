#pragma once

// Dense exact elimination on Eigen matrices, templated on the scalar.
// Fraction-free (Bareiss) elimination over the integers for rank, and
// Gauss-Jordan over a field for reduced row echelon form and solving.

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "apolar/scalar.hpp"
#include "apolar/sparse_echelon.hpp"

namespace apolar::dense {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

struct EchelonShape {
    Index rank = 0;
    std::vector<Index> pivot_columns;
};

// In-place fraction-free elimination. Every intermediate entry is a minor of
// the input, so each division is exact. On return the first `rank` rows form
// an echelon form whose pivots sit at `pivot_columns`.
inline EchelonShape bareiss_echelon(Matrix<Integer>& m) {
    EchelonShape shape;
    const Index rows = m.rows();
    const Index cols = m.cols();
    Integer prev = 1;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pivot = -1;
        for (Index i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        const Integer p = m(r, c);
        for (Index i = r + 1; i < rows; ++i) {
            const Integer f = m(i, c);
            for (Index j = c + 1; j < cols; ++j) {
                m(i, j) = (m(i, j) * p - f * m(r, j)) / prev;
            }
            m(i, c) = 0;
        }
        // Rows above the pivot row keep their values; rows below were scaled.
        prev = p;
        shape.pivot_columns.push_back(c);
        ++r;
    }
    shape.rank = r;
    return shape;
}

// Clears denominators row by row and runs bareiss_echelon.
inline Index rational_rank(const Matrix<Rational>& a) {
    Matrix<Integer> m(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (Index j = 0; j < a.cols(); ++j) {
            const Integer d = boost::multiprecision::denominator(a(i, j));
            l = boost::multiprecision::lcm(l, d);
        }
        for (Index j = 0; j < a.cols(); ++j) {
            m(i, j) = boost::multiprecision::numerator(a(i, j)) * (l / boost::multiprecision::denominator(a(i, j)));
        }
    }
    return bareiss_echelon(m).rank;
}

// Gauss-Jordan over a field: returns the reduced row echelon form.
template <class S>
EchelonShape rref_in_place(Matrix<S>& m) {
    EchelonShape shape;
    const Index rows = m.rows();
    const Index cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pivot = -1;
        for (Index i = r; i < rows; ++i) {
            if (!Field<S>::is_zero(m(i, c))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        const S inv = Field<S>::inverse(m(r, c));
        for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || Field<S>::is_zero(m(i, c))) continue;
            const S f = m(i, c);
            for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        shape.pivot_columns.push_back(c);
        ++r;
    }
    shape.rank = r;
    return shape;
}

// Some x with a x = b, or nullopt when the system is inconsistent. Free
// variables are set to zero.
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& a, const Vector<S>& b) {
    Matrix<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const EchelonShape shape = rref_in_place(aug);
    if (!shape.pivot_columns.empty() && shape.pivot_columns.back() == a.cols()) return std::nullopt;
    Vector<S> x(a.cols());
    for (Index j = 0; j < a.cols(); ++j) x(j) = S(0);
    for (Index i = 0; i < shape.rank; ++i) x(shape.pivot_columns[static_cast<std::size_t>(i)]) = aug(i, a.cols());
    return x;
}

template <class S>
Matrix<S> from_rows(const std::vector<SparseRow<S>>& rows, Index cols) {
    Matrix<S> m(static_cast<Index>(rows.size()), cols);
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < cols; ++j) m(i, j) = S(0);
        for (const auto& [c, v] : rows[static_cast<std::size_t>(i)]) m(i, static_cast<Index>(c)) = v;
    }
    return m;
}

} // namespace apolar::dense
