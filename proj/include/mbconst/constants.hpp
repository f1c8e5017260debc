// The sharp Markov-Bernstein constant gamma_n(c, beta) of the forward
// difference operator in the Meixner norm, together with its closed-form
// ceilings and the beta = 1 two-sided estimates.

#ifndef MBCONST_CONSTANTS_HPP
#define MBCONST_CONSTANTS_HPP

#include <cstddef>
#include <string>
#include <utility>

#include "mbconst/meixner.hpp"

namespace mbconst {

/// Engine used to compute the smallest eigenvalue behind gamma_n.
/// `automatic` resolves to chebyshev when beta = 1 and n >= 2, and to
/// sturm_C otherwise.
enum class Method { automatic, sturm_B, sturm_C, charpoly, chebyshev };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct GammaResult {
    std::size_t n;
    MeixnerParams params;
    double lambda_min;
    double gamma;          // (1/c - 1) / sqrt(lambda_min)
    Method method;         // the resolved engine, never `automatic`
    double tol;
    unsigned iterations;
};

/// gamma_n(c, beta) = (1/c - 1)/sqrt(lambda_min), with lambda_min computed
/// by the selected engine. Requesting chebyshev with beta != 1 is an error.
GammaResult gamma_n(const MeixnerParams& params, std::size_t n,
                    Method method = Method::automatic, double tol = 1e-12);

/// Ceiling of the sequence-space inequality:
/// 1 + 1/sqrt(c) for beta >= 1, 1 + 1/sqrt(beta c) for 0 < beta < 1.
double sequence_bound(const MeixnerParams& params);

/// Two-sided estimates for gamma_n(c, 1), n >= 2, plus the bracket that
/// pins epsilon_n.
struct BoundsReport {
    std::size_t n;
    double c;
    double lower;
    double upper;
    double epsilon_lower;   // 1/(n(n+1))
    double epsilon_upper;   // 2 sin^2(pi/(2n))
};

/// lower = (1+1/sqrt(c)) / sqrt(1 + 4 sqrt(c)/(1-sqrt(c))^2 * sin^2(pi/(2n)))
/// upper = (1+1/sqrt(c)) / sqrt(1 + 2 sqrt(c)/((1-sqrt(c))^2 n(n+1)))
BoundsReport bounds_beta1(double c, std::size_t n);

/// The epsilon_n bracket (1/(n(n+1)), 2 sin^2(pi/(2n))) for n >= 2.
std::pair<double, double> epsilon_bounds(std::size_t n);

}  // namespace mbconst

#endif
