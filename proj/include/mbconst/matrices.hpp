// Matrices tied to the forward-difference operator in the orthonormal
// Meixner basis: the lower-triangular coefficient matrix A_n and the
// tridiagonal inverses B_n = (A_n A_n^T)^{-1}, C_n = (A_n^T A_n)^{-1}.
//
// B_n and C_n are stored in their Jacobi form (positive off-diagonals),
// which leaves the spectrum unchanged: flipping the sign of the
// off-diagonal of a symmetric tridiagonal matrix is a diagonal similarity.

#ifndef MBCONST_MATRICES_HPP
#define MBCONST_MATRICES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mbconst/meixner.hpp"

namespace mbconst {

/// Symmetric tridiagonal matrix: n diagonal entries, n-1 off-diagonal ones.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }
};

/// Small dense square matrix, row-major. Used for the lower-triangular A_n
/// and for oracle-scale Gram matrices; never for large n.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n_) : n(n_), data(n_ * n_, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

/// Consecutive ratio alpha_k / alpha_{k-1} = sqrt((beta+k-1)/(k c)) of the
/// normalization sequence alpha_k = c^{-k/2} sqrt((beta)_k / k!).
/// alpha_k itself grows like c^{-k/2} and is never formed.
double alpha_ratio(const MeixnerParams& params, unsigned k);

/// Jacobi form of B_n = (A_n A_n^T)^{-1}:
///   diag:  (beta+k-1)/(k c) + 1 for k = 1..n-1, then (beta+n-1)/(n c);
///   off:   sqrt((beta+k)/((k+1) c)) for k = 1..n-1.
SymTridiag build_B(const MeixnerParams& params, std::size_t n);

/// Jacobi form of C_n = (A_n^T A_n)^{-1}:
///   diag:  beta/c, then (beta+k-1)/(k c) + 1 for k = 2..n;
///   off:   sqrt((beta+k-1)/(k c)) for k = 1..n-1.
/// At beta = 1 this is the constant-band matrix with diag 1/c, 1/c+1, ...
/// and off 1/sqrt(c).
SymTridiag build_C(const MeixnerParams& params, std::size_t n);

/// Dense lower-triangular A_n with entries a_{ij} = alpha_{j-1}/alpha_i for
/// j <= i (1-based), each computed as a product of consecutive inverse
/// ratios. Oracle use only; n is capped at 64.
DenseMatrix build_A_dense(const MeixnerParams& params, std::size_t n);

/// Outcome of the factorization cross-check.
struct FactorizationCheck {
    bool ok = true;
    double max_error = 0.0;
    std::string detail;
};

/// Cross-checks the matrix constructions against dense linear algebra:
/// rebuilds A_n as diag{1/alpha_k} T_n diag{alpha_{k-1}} and compares with
/// build_A_dense, then inverts A_n A_n^T and A_n^T A_n densely and compares
/// with build_B / build_C up to the off-diagonal sign flip. n capped at 16.
FactorizationCheck verify_factorization(const MeixnerParams& params,
                                        std::size_t n, double tol);

}  // namespace mbconst

#endif
