#include "mbconst/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mbconst/eigensolve.hpp"
#include "mbconst/matrices.hpp"

namespace mbconst {

const char* method_name(Method m) {
    switch (m) {
        case Method::automatic: return "automatic";
        case Method::sturm_B: return "sturm_B";
        case Method::sturm_C: return "sturm_C";
        case Method::charpoly: return "charpoly";
        case Method::chebyshev: return "chebyshev";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "automatic" || name == "auto") return Method::automatic;
    if (name == "sturm_B") return Method::sturm_B;
    if (name == "sturm_C") return Method::sturm_C;
    if (name == "charpoly") return Method::charpoly;
    if (name == "chebyshev") return Method::chebyshev;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected sturm_B, sturm_C, charpoly, chebyshev or automatic)");
}

GammaResult gamma_n(const MeixnerParams& params, std::size_t n,
                    Method method, double tol) {
    if (n < 1)
        throw std::domain_error("gamma_n: n must be >= 1");
    if (!(tol > 0.0))
        throw std::domain_error("gamma_n: tol must be positive");

    Method resolved = method;
    if (resolved == Method::automatic)
        resolved = (params.beta == 1.0 && n >= 2) ? Method::chebyshev : Method::sturm_C;

    EigenEstimate est;
    switch (resolved) {
        case Method::sturm_B:
            est = smallest_eigenvalue(build_B(params, n), tol);
            break;
        case Method::sturm_C:
            est = smallest_eigenvalue(build_C(params, n), tol);
            break;
        case Method::charpoly:
            est = charpoly_smallest_zero(params, n, tol);
            break;
        case Method::chebyshev: {
            if (params.beta != 1.0)
                throw std::invalid_argument("gamma_n: method chebyshev requires beta = 1");
            const double rc = std::sqrt(params.c);
            if (n == 1) {
                // C_1(c,1) = [1/c]; the n = 1 secular root is -sqrt(c)/2.
                est.value = 1.0 / params.c;
            } else {
                const ChebRoot root = cheb_smallest_root(static_cast<unsigned>(n), params.c, tol);
                const double q = 1.0 / rc - 1.0;
                est.value = q * q + 2.0 * root.epsilon_n / rc;
            }
            break;
        }
        case Method::automatic:
            break;  // unreachable
    }

    GammaResult r{n, params, est.value,
                  (1.0 / params.c - 1.0) / std::sqrt(est.value),
                  resolved, tol, est.iterations};
    return r;
}

double sequence_bound(const MeixnerParams& params) {
    if (params.beta >= 1.0)
        return 1.0 + 1.0 / std::sqrt(params.c);
    return 1.0 + 1.0 / std::sqrt(params.beta * params.c);
}

BoundsReport bounds_beta1(double c, std::size_t n) {
    if (!(c > 0.0) || !(c < 1.0))
        throw std::domain_error("bounds_beta1: c must lie in (0,1)");
    if (n < 2)
        throw std::domain_error("bounds_beta1: n must be >= 2");

    const double rc = std::sqrt(c);
    const double top = 1.0 + 1.0 / rc;
    const double denom = (1.0 - rc) * (1.0 - rc);
    const auto eps = epsilon_bounds(n);

    BoundsReport b;
    b.n = n;
    b.c = c;
    b.epsilon_lower = eps.first;
    b.epsilon_upper = eps.second;
    b.lower = top / std::sqrt(1.0 + 2.0 * rc * eps.second / denom);
    b.upper = top / std::sqrt(1.0 + 2.0 * rc * eps.first / denom);
    return b;
}

std::pair<double, double> epsilon_bounds(std::size_t n) {
    if (n < 2)
        throw std::domain_error("epsilon_bounds: n must be >= 2");
    const double nd = static_cast<double>(n);
    const double s = std::sin(std::numbers::pi / (2.0 * nd));
    return {1.0 / (nd * (nd + 1.0)), 2.0 * s * s};
}

}  // namespace mbconst
