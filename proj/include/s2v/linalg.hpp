#pragma once

#include <span>
#include <vector>

#include "s2v/matrix.hpp"

namespace s2v::stats {

struct EigenSym {
    std::vector<double> values;  // descending
    Matrix vectors;              // columns aligned with values
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm falls below
/// 1e-12 * max(1, ||A||_F). Eigenvector signs are canonicalized so the
/// entry of largest magnitude is positive.
EigenSym jacobi_eigen(const Matrix& a);

struct LeastSquares {
    std::vector<double> beta;  // solution in original column order
    Matrix r;                  // upper-triangular factor of the pivoted matrix
    std::vector<int> perm;     // perm[k] = original index of pivoted column k
};

/// Householder QR with column pivoting; throws Error(rank_deficient) naming
/// the offending original column when a pivot falls below
/// max(n, m) * eps * |R[0][0]|. Requires n >= m >= 1.
LeastSquares qr_least_squares(const Matrix& a, std::span<const double> y);

/// (A'A)^-1 reconstructed from the pivoted R factor.
Matrix xtx_inverse(const LeastSquares& ls);

}  // namespace s2v::stats
