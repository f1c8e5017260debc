// Independent brute-force checks: the Gram-matrix route to gamma_n that
// bypasses all tridiagonal machinery, the finitely supported extremal
// sequence, and the chain-sequence / monotonicity checks in beta.

#ifndef MBCONST_VERIFY_HPP
#define MBCONST_VERIFY_HPP

#include <cstddef>
#include <vector>

#include "mbconst/matrices.hpp"
#include "mbconst/meixner.hpp"

namespace mbconst {

/// All eigenvalues of a small dense symmetric matrix, ascending, by cyclic
/// Jacobi rotations (off-norm threshold 1e-14 relative to the Frobenius
/// norm). Oracle scale only.
std::vector<double> jacobi_eigenvalues(DenseMatrix m);

struct OracleReport {
    std::size_t n;
    MeixnerParams params;
    DenseMatrix gram;        // gram(i,j) = <Delta p_{i+1}, Delta p_{j+1}>
    double gamma_oracle;     // sqrt(lambda_max(gram))
    double max_tail_bound;   // worst truncation tail over all entries
};

/// gamma_n from scratch: each Gram entry <Delta p_i, Delta p_j>, i,j = 1..n,
/// is a truncated sum of pointwise Meixner polynomial evaluations, and the
/// largest eigenvalue comes from dense Jacobi rotations. Nothing is shared
/// with the tridiagonal route. n is capped at 12.
OracleReport oracle_gamma(const MeixnerParams& params, std::size_t n,
                          double trunc_tol = 1e-12);

/// Norm ratio ||Delta f|| / ||f|| in the (c, 1) norm of the sequence
/// f(k) = (-1)^k c^{-k/2} for k <= n, 0 beyond: exactly
/// sqrt((n (1+1/sqrt(c))^2 + 1)/(n+1)). Cross-checked against direct
/// summation whenever c^{-n/2} is representable.
double extremal_sequence_ratio(double c, std::size_t n);

/// The sufficient condition for the entrywise beta-derivative of the
/// B-matrix to be positive definite: for k = 1..n-1,
///   (1/(2 sqrt((k+1)(k+beta) c)))^2 / (1/(kc) * 1/((k+1)c)) < 1/4,
/// evaluated both in this form and as the equivalent beta + k(1-c) > 0.
/// Returns one flag per k; the two forms must agree.
std::vector<bool> chain_condition_check(const MeixnerParams& params, std::size_t n);

struct MonotoneReport {
    double c;
    std::size_t n;
    std::vector<double> beta_grid;
    std::vector<double> lambda_values;  // lambda_min(B_n) per beta
    std::vector<bool> chain_ok;
};

/// Samples lambda_min(B_n(c, beta)) along an increasing beta grid and
/// asserts the strict increase the chain-sequence condition guarantees.
/// Throws std::runtime_error naming the offending pair on violation.
MonotoneReport monotonicity_scan(double c, std::size_t n,
                                 const std::vector<double>& beta_grid,
                                 double tol = 1e-12);

}  // namespace mbconst

#endif
