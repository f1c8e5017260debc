// Meixner weight, Meixner polynomials and truncated inner products on the
// nonnegative integers.
//
// The weight is w_k = (beta)_k c^k / k! with parameters c in (0,1), beta > 0.
// All functions are pure; the parameter pair is validated once at
// construction of MeixnerParams.

#ifndef MBCONST_MEIXNER_HPP
#define MBCONST_MEIXNER_HPP

#include <cstddef>
#include <functional>

namespace mbconst {

/// Parameter pair (c, beta) of the Meixner weight. Construction enforces
/// 0 < c < 1 and beta > 0 strictly; boundary values are rejected.
struct MeixnerParams {
    double c;
    double beta;

    MeixnerParams(double c_, double beta_);
};

/// Result of a truncated infinite sum: the partial sum, the number of terms
/// it used, and the geometric-majorant estimate of the discarded tail.
struct TruncatedSum {
    double value = 0.0;
    std::size_t terms_used = 0;
    double tail_bound = 0.0;
};

/// Rising factorial (beta)_k = beta (beta+1) ... (beta+k-1), with (beta)_0 = 1.
/// Throws std::range_error once the product overflows to infinity.
double pochhammer(double beta, unsigned k);

/// Meixner weight w_k = (beta)_k c^k / k!, evaluated by the running ratio
/// w_k = w_{k-1} * c (beta+k-1) / k.
double weight(const MeixnerParams& params, unsigned k);

/// Meixner polynomial M_n(x; beta, c), the terminating hypergeometric sum
///   sum_{k=0..n} (-n)_k (-x)_k / ((beta)_k k!) * (1 - 1/c)^k.
double meixner_poly(const MeixnerParams& params, unsigned n, double x);

/// Orthonormal Meixner polynomial
///   p_m(x) = (1-c)^{beta/2} c^{m/2} sqrt((beta)_m / m!) M_m(x; beta, c).
/// The scale factor is accumulated as a product of per-index ratios
/// sqrt(c (beta+j-1) / j) (log-space for m > 64) so that no large
/// intermediate is ever formed.
double orthonormal_meixner(const MeixnerParams& params, unsigned m, double x);

/// Forward difference (Delta f)(x) = f(x+1) - f(x).
template <class F>
double forward_difference(F&& f, double x) {
    return f(x + 1.0) - f(x);
}

/// Truncated Meixner inner product sum_k w_k f(k) g(k).
///
/// Terms are accumulated until their magnitudes have been nonincreasing for
/// a few consecutive indices and the geometric tail estimate
/// |t_K| * c/(1-c) * 4 drops below tol. The caller is responsible for f*g
/// having at most polynomial growth, otherwise the sum need not converge.
/// Throws std::runtime_error if max_terms is exhausted first.
TruncatedSum inner_product(const MeixnerParams& params,
                           const std::function<double(double)>& f,
                           const std::function<double(double)>& g,
                           double tol = 1e-12,
                           std::size_t max_terms = 100000);

/// Meixner norm ||f|| = sqrt(<f, f>).
TruncatedSum meixner_norm(const MeixnerParams& params,
                          const std::function<double(double)>& f,
                          double tol = 1e-12,
                          std::size_t max_terms = 100000);

}  // namespace mbconst

#endif
