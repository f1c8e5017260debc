#include "mbconst/meixner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mbconst {

MeixnerParams::MeixnerParams(double c_, double beta_) : c(c_), beta(beta_) {
    if (!(c > 0.0) || !(c < 1.0))
        throw std::domain_error("MeixnerParams: c must lie strictly in (0,1), got " +
                                std::to_string(c_));
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::domain_error("MeixnerParams: beta must be strictly positive, got " +
                                std::to_string(beta_));
}

double pochhammer(double beta, unsigned k) {
    if (!(beta > 0.0))
        throw std::domain_error("pochhammer: beta must be positive");
    double r = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        r *= beta + j;
        if (std::isinf(r))
            throw std::range_error("pochhammer: overflow at k=" + std::to_string(j + 1));
    }
    return r;
}

double weight(const MeixnerParams& params, unsigned k) {
    double w = 1.0;
    for (unsigned j = 1; j <= k; ++j)
        w *= params.c * (params.beta + j - 1) / j;
    return w;
}

double meixner_poly(const MeixnerParams& params, unsigned n, double x) {
    const double z = 1.0 - 1.0 / params.c;
    double term = 1.0;
    double sum = 1.0;
    // term ratio: (-n)_k (-x)_k / ((beta)_k k!) advances by
    // (k-n)(k-x) z / ((beta+k)(k+1)); the factor (k-n) terminates the sum.
    for (unsigned k = 0; k < n; ++k) {
        term *= (static_cast<double>(k) - n) * (k - x) * z /
                ((params.beta + k) * (k + 1));
        sum += term;
    }
    return sum;
}

double orthonormal_meixner(const MeixnerParams& params, unsigned m, double x) {
    double scale;
    if (m <= 64) {
        scale = std::pow(1.0 - params.c, 0.5 * params.beta);
        for (unsigned j = 1; j <= m; ++j)
            scale *= std::sqrt(params.c * (params.beta + j - 1) / j);
    } else {
        // c^{m/2} underflows long before the product with M_m does; keep the
        // scale in log space and exponentiate once.
        double log_scale = 0.5 * params.beta * std::log1p(-params.c);
        for (unsigned j = 1; j <= m; ++j)
            log_scale += 0.5 * std::log(params.c * (params.beta + j - 1) / j);
        scale = std::exp(log_scale);
    }
    return scale * meixner_poly(params, m, x);
}

TruncatedSum inner_product(const MeixnerParams& params,
                           const std::function<double(double)>& f,
                           const std::function<double(double)>& g,
                           double tol, std::size_t max_terms) {
    if (!(tol > 0.0))
        throw std::domain_error("inner_product: tol must be positive");

    const double safety = 4.0;
    const double majorant = params.c / (1.0 - params.c) * safety;

    TruncatedSum out;
    double w = 1.0;
    // |t_k| can dip through zero at an integer root of f*g, so a single
    // small term must not trigger the stop. Keep the last four magnitudes;
    // stop only once they are nonincreasing and the largest of them already
    // satisfies the tail criterion.
    double hist[4] = {0, 0, 0, 0};
    std::size_t filled = 0;

    for (std::size_t k = 0; k < max_terms; ++k) {
        if (k > 0)
            w *= params.c * (params.beta + k - 1) / k;
        const double xk = static_cast<double>(k);
        const double t = w * f(xk) * g(xk);
        out.value += t;
        out.terms_used = k + 1;

        hist[0] = hist[1];
        hist[1] = hist[2];
        hist[2] = hist[3];
        hist[3] = std::fabs(t);
        if (filled < 4)
            ++filled;

        const bool decreasing = filled == 4 && hist[0] >= hist[1] &&
                                hist[1] >= hist[2] && hist[2] >= hist[3];
        if (decreasing && hist[0] * majorant < tol) {
            out.tail_bound = hist[3] * majorant;
            return out;
        }
    }
    throw std::runtime_error("inner_product: no convergence within " +
                             std::to_string(max_terms) + " terms (tol=" +
                             std::to_string(tol) + ")");
}

TruncatedSum meixner_norm(const MeixnerParams& params,
                          const std::function<double(double)>& f,
                          double tol, std::size_t max_terms) {
    TruncatedSum s = inner_product(params, f, f, tol, max_terms);
    s.value = std::sqrt(std::max(0.0, s.value));
    return s;
}

}  // namespace mbconst
