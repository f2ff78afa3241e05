#pragma once

// Exact Gaussian elimination over an arbitrary field scalar (Rational,
// GaussianRational, GF<p>). No pivot-size heuristics: any nonzero pivot is
// exact, so we take the first one in column order for determinism.

#include <qpc/exact_scalar.hpp>

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace qpc {

template <class Scalar>
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using ExactVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = ExactMatrix<Rational>;
using RationalVector = ExactVector<Rational>;

// Solution set of A x = b: one particular solution plus a nullspace basis
// (columns), or inconsistent.
template <class Scalar>
struct ExactSolution {
    bool consistent = false;
    ExactVector<Scalar> particular;  // valid when consistent
    ExactMatrix<Scalar> nullspace;   // cols() == nullity of A
    Eigen::Index rank = 0;
};

// Row-reduces the augmented system in place and back-substitutes.
template <class Scalar>
ExactSolution<Scalar> solve_exact(ExactMatrix<Scalar> A, ExactVector<Scalar> b) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    if (b.size() != rows) throw std::invalid_argument("solve_exact: dimension mismatch");

    std::vector<Eigen::Index> pivot_col;  // pivot column of each pivot row
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!scalar_is_zero(A(i, c))) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r) {
            A.row(p).swap(A.row(r));
            std::swap(b(p), b(r));
        }
        const Scalar inv_piv = Scalar(1) / A(r, c);
        for (Eigen::Index j = c; j < cols; ++j) A(r, j) = A(r, j) * inv_piv;
        b(r) = b(r) * inv_piv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || scalar_is_zero(A(i, c))) continue;
            const Scalar f = A(i, c);
            for (Eigen::Index j = c; j < cols; ++j) A(i, j) -= f * A(r, j);
            b(i) -= f * b(r);
        }
        pivot_col.push_back(c);
        ++r;
    }

    ExactSolution<Scalar> sol;
    sol.rank = r;
    for (Eigen::Index i = r; i < rows; ++i) {
        if (!scalar_is_zero(b(i))) return sol;  // 0 = nonzero: inconsistent
    }
    sol.consistent = true;

    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Eigen::Index i = 0; i < r; ++i) is_pivot[static_cast<size_t>(pivot_col[i])] = true;

    sol.particular = ExactVector<Scalar>::Constant(cols, Scalar(0));
    for (Eigen::Index i = 0; i < r; ++i) sol.particular(pivot_col[i]) = b(i);

    const Eigen::Index nullity = cols - r;
    sol.nullspace = ExactMatrix<Scalar>::Constant(cols, nullity, Scalar(0));
    Eigen::Index nk = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        sol.nullspace(c, nk) = Scalar(1);
        for (Eigen::Index i = 0; i < r; ++i) sol.nullspace(pivot_col[i], nk) = -A(i, c);
        ++nk;
    }
    return sol;
}

template <class Scalar>
Eigen::Index exact_rank(ExactMatrix<Scalar> A) {
    ExactVector<Scalar> zero = ExactVector<Scalar>::Constant(A.rows(), Scalar(0));
    return solve_exact<Scalar>(std::move(A), std::move(zero)).rank;
}

}  // namespace qpc
