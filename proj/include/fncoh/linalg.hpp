#pragma once

#include "fncoh/form.hpp"
#include "fncoh/scalar.hpp"

#include <functional>
#include <vector>

namespace fncoh {

/// Exact Gaussian elimination over the Gaussian rationals. Pivot choice is
/// "first nonzero" -- with exact arithmetic there is no stability concern.
/// Returns the rank; if `pivotCols` is given, the pivot column indices.
inline int eliminate(Matrix& A, std::vector<int>* pivotCols = nullptr) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!A(i, c).isZero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) A.row(piv).swap(A.row(r));
        Scalar inv = A(r, c).inverse();
        for (Eigen::Index j = c; j < cols; ++j) A(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || A(i, c).isZero()) continue;
            Scalar f = A(i, c);
            for (Eigen::Index j = c; j < cols; ++j) A(i, j) -= f * A(r, j);
        }
        if (pivotCols) pivotCols->push_back(static_cast<int>(c));
        ++r;
    }
    return static_cast<int>(r);
}

inline int rank(Matrix A) { return eliminate(A); }

/// Columns form a basis of ker A; empty (n x 0) matrix for trivial kernel.
inline Matrix kernelBasis(const Matrix& A) {
    Matrix R = A;
    std::vector<int> pivots;
    int rk = eliminate(R, &pivots);
    const Eigen::Index n = A.cols();
    std::vector<bool> isPivot(n, false);
    for (int p : pivots) isPivot[p] = true;
    Matrix K(n, n - rk);
    Eigen::Index col = 0;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (isPivot[free]) continue;
        for (Eigen::Index j = 0; j < n; ++j) K(j, col) = Scalar(0);
        K(free, col) = Scalar(1);
        // back-substitute: pivot row r has leading 1 in column pivots[r]
        for (int r = 0; r < rk; ++r)
            K(pivots[r], col) = -R(r, free);
        ++col;
    }
    return K;
}

/// Subset of columns of A forming a basis of the column space.
inline Matrix imageBasis(const Matrix& A) {
    Matrix R = A;
    std::vector<int> pivots;
    eliminate(R, &pivots);
    Matrix B(A.rows(), static_cast<Eigen::Index>(pivots.size()));
    for (Eigen::Index j = 0; j < B.cols(); ++j) B.col(j) = A.col(pivots[j]);
    return B;
}

inline Matrix conjTranspose(const Matrix& A) {
    Matrix B(A.cols(), A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) B(j, i) = A(i, j).conj();
    return B;
}

/// Determinant of a square matrix by exact forward elimination.
inline Scalar determinant(Matrix A) {
    const Eigen::Index n = A.rows();
    Scalar det(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = c; i < n; ++i)
            if (!A(i, c).isZero()) { piv = i; break; }
        if (piv < 0) return Scalar(0);
        if (piv != c) { A.row(piv).swap(A.row(c)); det = -det; }
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (A(i, c).isZero()) continue;
            Scalar f = A(i, c) / A(c, c);
            for (Eigen::Index j = c; j < n; ++j) A(i, j) -= f * A(c, j);
        }
        det *= A(c, c);
    }
    return det;
}

inline Matrix inverseMatrix(const Matrix& A) {
    const Eigen::Index n = A.rows();
    Matrix aug(n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            aug(i, j) = A(i, j);
            aug(i, n + j) = Scalar(i == j ? 1 : 0);
        }
    if (eliminate(aug) != n) throw std::invalid_argument("inverseMatrix: singular");
    Matrix inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline Matrix hstack(const Matrix& A, const Matrix& B) {
    Matrix C(A.rows(), A.cols() + B.cols());
    C.leftCols(A.cols()) = A;
    C.rightCols(B.cols()) = B;
    return C;
}

inline Matrix vstack(const Matrix& A, const Matrix& B) {
    Matrix C(A.rows() + B.rows(), A.cols());
    C.topRows(A.rows()) = A;
    C.bottomRows(B.rows()) = B;
    return C;
}

inline Matrix zeroMatrix(Eigen::Index r, Eigen::Index c) {
    Matrix A(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) A(i, j) = Scalar(0);
    return A;
}

inline Matrix identityMatrix(Eigen::Index n) {
    Matrix A = zeroMatrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) A(i, i) = Scalar(1);
    return A;
}

inline bool matricesEqual(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (A(i, j) != B(i, j)) return false;
    return true;
}

inline bool isZeroMatrix(const Matrix& A) {
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (!A(i, j).isZero()) return false;
    return true;
}

// ---- subspaces of a based coordinate space, as column spans -----------------

/// span(B) subset of span(A)?
inline bool spanContains(const Matrix& A, const Matrix& B) {
    return rank(A) == rank(hstack(A, B));
}

/// Exact subspace equality by double inclusion via stacked ranks.
inline bool spanEquals(const Matrix& A, const Matrix& B) {
    int ra = rank(A), rb = rank(B);
    return ra == rb && rank(hstack(A, B)) == ra;
}

/// Basis of span(A) cap span(B).
inline Matrix spanIntersect(const Matrix& A, const Matrix& B) {
    if (A.cols() == 0 || B.cols() == 0) return Matrix(A.rows(), 0);
    Matrix stacked = hstack(A, -B);
    Matrix K = kernelBasis(stacked);  // (colsA + colsB) x d
    Matrix result(A.rows(), K.cols());
    for (Eigen::Index j = 0; j < K.cols(); ++j)
        result.col(j) = A * K.block(0, j, A.cols(), 1);
    return imageBasis(result);
}

/// Orthogonal complement w.r.t. the Hermitian inner product of the basis.
inline Matrix orthComplement(const Matrix& A) {
    return kernelBasis(conjTranspose(A));
}

/// Do the given spans intersect trivially pairwise and span a direct sum?
inline bool isDirectSum(const std::vector<Matrix>& parts) {
    if (parts.empty()) return true;
    int total = 0;
    Matrix all(parts.front().rows(), 0);
    for (const auto& P : parts) {
        total += rank(P);
        all = hstack(all, P);
    }
    return rank(all) == total;
}

// ---- forms as coordinate vectors -------------------------------------------

inline Vector formToVec(const Form& f, const std::vector<BasisMask>& basis) {
    Vector v(static_cast<Eigen::Index>(basis.size()));
    for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = f.coeff(basis[j]);
    return v;
}

inline Form vecToForm(const Vector& v, const std::vector<BasisMask>& basis,
                      int dim, int degree) {
    Form f(dim, degree);
    for (Eigen::Index j = 0; j < v.size(); ++j) f.add(basis[j], v(j));
    return f;
}

/// Matrix of a linear map Lambda^{degFrom} -> Lambda^{degTo} in the canonical
/// increasing-tuple bases.
inline Matrix matrixOfMap(int dim, int degFrom, int degTo,
                          const std::function<Form(const Form&)>& map) {
    auto from = basisMasks(dim, degFrom);
    auto to = basisMasks(dim, degTo);
    Matrix M = zeroMatrix(static_cast<Eigen::Index>(to.size()),
                          static_cast<Eigen::Index>(from.size()));
    for (std::size_t j = 0; j < from.size(); ++j) {
        Form e(dim, degFrom);
        e.add(from[j], Scalar(1));
        Form img = map(e);
        for (std::size_t i = 0; i < to.size(); ++i) {
            Scalar c = img.coeff(to[i]);
            if (!c.isZero()) M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c;
        }
    }
    return M;
}

}  // namespace fncoh
