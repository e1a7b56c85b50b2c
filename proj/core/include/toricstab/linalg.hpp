#pragma once

#include <optional>

#include "toricstab/rational.hpp"

namespace toric {

// Dense exact-rational linear algebra at desk scale (matrices up to ~6x64).
// Rows are QVec; a QMat is a list of rows.

inline QMat qmat_identity(int n) {
    QMat m(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec qvec_of(const IVec& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

inline Rat dot(const QVec& a, const IVec& b) { return dot(a, qvec_of(b)); }
inline Rat dot(const IVec& a, const QVec& b) { return dot(qvec_of(a), b); }

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& a, const QVec& x);
QMat qmat_transpose(const QMat& a);

Rat qmat_det(QMat a);

// Row rank via fraction-aware Gaussian elimination.
int qmat_rank(QMat a);

// Solves a.x = b for square a; nullopt when a is singular.
std::optional<QVec> solve_linear(QMat a, QVec b);

// nullopt when singular.
std::optional<QMat> qmat_inverse(QMat a);

// One nonzero kernel vector of an (m x n) matrix with rank n-1; nullopt if
// the kernel is trivial or has dimension > 1.
std::optional<QVec> kernel_line(const QMat& a, int ncols);

// Affine rank of a point set (0 for a single point).
int affine_rank(const std::vector<QVec>& pts);

} // namespace toric
