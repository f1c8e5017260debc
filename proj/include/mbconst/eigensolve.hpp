// Smallest-eigenvalue engines for the Jacobi matrices B_n and C_n:
// Sturm-sequence bisection on the matrix entries, bisection on the sign of
// the characteristic polynomial recurrence, and the beta = 1 reduction to a
// perturbed Chebyshev polynomial of the second kind.

#ifndef MBCONST_EIGENSOLVE_HPP
#define MBCONST_EIGENSOLVE_HPP

#include <cstddef>

#include "mbconst/matrices.hpp"
#include "mbconst/meixner.hpp"

namespace mbconst {

/// Converged eigenvalue estimate with the final bracket width and the
/// number of bisection steps it took.
struct EigenEstimate {
    double value = 0.0;
    double bracket_width = 0.0;
    unsigned iterations = 0;
};

/// Smallest root of the beta = 1 secular polynomial, reported both as the
/// root tau in (-1,1) and as epsilon_n = 1 + tau.
struct ChebRoot {
    double tau = 0.0;
    double epsilon_n = 0.0;
};

/// Number of eigenvalues of T strictly below x, by counting negative pivots
/// of the LDL^T recurrence q_1 = d_1 - x, q_i = d_i - x - e_{i-1}^2/q_{i-1}.
/// A zero pivot is replaced by a tiny negative perturbation so the count
/// stays defined.
std::size_t sturm_count(const SymTridiag& t, double x);

/// Smallest eigenvalue by Sturm bisection inside the Gershgorin interval,
/// converged to hi - lo <= tol * max(1, |hi|).
EigenEstimate smallest_eigenvalue(const SymTridiag& t, double tol = 1e-12);

/// Smallest zero of the characteristic polynomial P_n generated by
///   P_0 = 1,  P_1(x) = x - beta/c,
///   P_k(x) = (x - (beta+k-1)/(kc) - 1) P_{k-1}(x)
///            - ((beta+k-2)/((k-1)c)) P_{k-2}(x),
/// located by a coarse sign scan over the Gershgorin interval followed by
/// bisection. The recurrence is rescaled jointly each step; only signs are
/// consumed.
EigenEstimate charpoly_smallest_zero(const MeixnerParams& params,
                                     std::size_t n, double tol = 1e-12);

/// phi_n(z) = 2^{-n} (U_n(z) + sqrt(c) U_{n-1}(z)) with U_m the Chebyshev
/// polynomials of the second kind.
double cheb_phi(unsigned n, double c, double z);

/// Smallest root of phi_n for n >= 2, bisected inside the bracket
/// guaranteed by the interlacing with the zeros of U_{n-1}. The returned
/// epsilon_n = 1 + tau always satisfies
/// 1/(n(n+1)) < epsilon_n < 2 sin^2(pi/(2n)).
ChebRoot cheb_smallest_root(unsigned n, double c, double tol = 1e-12);

}  // namespace mbconst

#endif
