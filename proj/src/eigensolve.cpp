#include "mbconst/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbconst {

namespace {

constexpr unsigned kMaxBisectIterations = 200;

struct GershgorinInterval {
    double lo;
    double hi;
};

GershgorinInterval gershgorin(const std::vector<double>& diag,
                              const std::vector<double>& off) {
    const std::size_t n = diag.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0)
            r += std::fabs(off[i - 1]);
        if (i + 1 < n)
            r += std::fabs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    return {lo, hi};
}

// Characteristic polynomial recurrence of the C-matrix family, evaluated
// with joint rescaling. Returns the sign of P_n(x) and, as a safety net for
// the scan, the number of zeros of P_n strictly above x (the sign-change
// count of the recurrence sequence).
struct CharpolyEval {
    int sign;
    std::size_t zeros_above;
};

CharpolyEval charpoly_eval(const MeixnerParams& params, std::size_t n, double x) {
    const double c = params.c;
    const double beta = params.beta;

    auto sign_of = [](double v, int prev) { return v > 0 ? 1 : (v < 0 ? -1 : -prev); };

    double p_prev = 1.0;
    double p_cur = x - beta / c;
    int s_prev = 1;
    int s_cur = sign_of(p_cur, s_prev);
    std::size_t changes = (s_cur != s_prev) ? 1u : 0u;

    for (std::size_t k = 2; k <= n; ++k) {
        const double d = (beta + k - 1) / (k * c) + 1.0;
        const double e2 = (beta + k - 2) / ((k - 1) * c);
        double p_next = (x - d) * p_cur - e2 * p_prev;

        const double m = std::max(std::fabs(p_next), std::fabs(p_cur));
        if (m > 1e200) {
            p_next /= m;
            p_cur /= m;
        } else if (m > 0.0 && m < 1e-200) {
            p_next /= m;
            p_cur /= m;
        }

        const int s_next = sign_of(p_next, s_cur);
        if (s_next != s_cur)
            ++changes;
        p_prev = p_cur;
        p_cur = p_next;
        s_prev = s_cur;
        s_cur = s_next;
    }
    return {s_cur, changes};
}

GershgorinInterval charpoly_gershgorin(const MeixnerParams& params, std::size_t n) {
    std::vector<double> diag(n), off(n > 0 ? n - 1 : 0);
    diag[0] = params.beta / params.c;
    for (std::size_t k = 2; k <= n; ++k)
        diag[k - 1] = (params.beta + k - 1) / (k * params.c) + 1.0;
    for (std::size_t k = 1; k < n; ++k)
        off[k - 1] = std::sqrt((params.beta + k - 1) / (k * params.c));
    return gershgorin(diag, off);
}

// U_n(z) + sqrt(c) U_{n-1}(z): same sign pattern as phi_n without the
// 2^{-n} factor, which would underflow at large n.
double cheb_phi_scaled(unsigned n, double c, double z) {
    double u_prev = 1.0;       // U_0
    double u_cur = 2.0 * z;    // U_1
    if (n == 1)
        return u_cur + std::sqrt(c) * u_prev;
    for (unsigned m = 2; m <= n; ++m) {
        const double u_next = 2.0 * z * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
    }
    return u_cur + std::sqrt(c) * u_prev;
}

}  // namespace

std::size_t sturm_count(const SymTridiag& t, double x) {
    const std::size_t n = t.size();
    std::size_t count = 0;
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double coupling = (i == 0) ? 0.0 : t.off[i - 1] * t.off[i - 1] / q;
        q = t.diag[i] - x - coupling;
        if (q == 0.0) {
            const double scale = std::fabs(t.diag[i]) + (i > 0 ? std::fabs(t.off[i - 1]) : 0.0);
            q = -std::numeric_limits<double>::epsilon() * (scale + 1.0);
        }
        if (q < 0.0)
            ++count;
    }
    return count;
}

EigenEstimate smallest_eigenvalue(const SymTridiag& t, double tol) {
    if (t.size() == 0)
        throw std::domain_error("smallest_eigenvalue: empty matrix");
    if (!(tol > 0.0))
        throw std::domain_error("smallest_eigenvalue: tol must be positive");

    auto interval = gershgorin(t.diag, t.off);
    double lo = interval.lo;
    // Nudge the upper end so that it strictly dominates the whole spectrum.
    double hi = interval.hi +
                2.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(interval.hi));

    EigenEstimate est;
    while (hi - lo > tol * std::max(1.0, std::fabs(hi))) {
        if (++est.iterations > kMaxBisectIterations)
            throw std::runtime_error("smallest_eigenvalue: tolerance not reached after " +
                                     std::to_string(kMaxBisectIterations) + " bisections");
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;  // interval no longer splittable in doubles
        if (sturm_count(t, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    est.value = 0.5 * (lo + hi);
    est.bracket_width = hi - lo;
    return est;
}

EigenEstimate charpoly_smallest_zero(const MeixnerParams& params,
                                     std::size_t n, double tol) {
    if (n < 1)
        throw std::domain_error("charpoly_smallest_zero: n must be >= 1");
    if (!(tol > 0.0))
        throw std::domain_error("charpoly_smallest_zero: tol must be positive");
    if (n == 1) {
        // P_1(x) = x - beta/c
        return {params.beta / params.c, 0.0, 0};
    }

    const auto interval = charpoly_gershgorin(params, n);
    double scan_lo = std::max(0.0, interval.lo);
    double scan_hi = interval.hi;
    std::size_t points = 1024;

    EigenEstimate est;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const double step = (scan_hi - scan_lo) / static_cast<double>(points);
        double lo = scan_lo;
        int sign_lo = charpoly_eval(params, n, lo).sign;
        double hi = lo;
        bool bracketed = false;
        for (std::size_t j = 1; j <= points; ++j) {
            hi = scan_lo + static_cast<double>(j) * step;
            const int s = charpoly_eval(params, n, hi).sign;
            if (s != sign_lo) {
                bracketed = true;
                break;
            }
            lo = hi;
        }
        if (!bracketed)
            throw std::runtime_error(
                "charpoly_smallest_zero: no sign change over the Gershgorin interval "
                "(internal error)");

        unsigned steps = 0;
        while (hi - lo > tol * std::max(1.0, std::fabs(hi))) {
            if (++steps > kMaxBisectIterations)
                throw std::runtime_error("charpoly_smallest_zero: tolerance not reached");
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (charpoly_eval(params, n, mid).sign == sign_lo)
                lo = mid;
            else
                hi = mid;
        }
        est.iterations += steps;

        // The coarse scan can jump over a close pair of zeros; the recurrence
        // sign-change count at the left bracket detects that, and the scan is
        // repeated at finer resolution below the current bracket.
        if (charpoly_eval(params, n, lo).zeros_above == n) {
            est.value = 0.5 * (lo + hi);
            est.bracket_width = hi - lo;
            return est;
        }
        scan_hi = lo;
        points = std::min<std::size_t>(points * 8, std::size_t{1} << 20);
    }
    throw std::runtime_error("charpoly_smallest_zero: smallest zero not isolated");
}

double cheb_phi(unsigned n, double c, double z) {
    if (n < 1)
        throw std::domain_error("cheb_phi: n must be >= 1");
    if (!(c > 0.0) || !(c < 1.0))
        throw std::domain_error("cheb_phi: c must lie in (0,1)");
    if (std::fabs(z) <= 1.0)
        return std::ldexp(cheb_phi_scaled(n, c, z), -static_cast<int>(n));

    // |U_m| grows like |2z|^m outside [-1,1]; fold the 2^{-n} in as we go.
    double u_prev = 1.0;
    double u_cur = z;  // U_1 / 2
    for (unsigned m = 2; m <= n; ++m) {
        const double u_next = z * u_cur - 0.25 * u_prev;
        u_prev = u_cur;
        u_cur = u_next;
    }
    return u_cur + 0.5 * std::sqrt(c) * u_prev;
}

ChebRoot cheb_smallest_root(unsigned n, double c, double tol) {
    if (n < 2)
        throw std::domain_error("cheb_smallest_root: n must be >= 2 (n = 1 has the closed-form root -sqrt(c)/2)");
    if (!(c > 0.0) || !(c < 1.0))
        throw std::domain_error("cheb_smallest_root: c must lie in (0,1)");
    if (!(tol > 0.0))
        throw std::domain_error("cheb_smallest_root: tol must be positive");

    const double nn1 = static_cast<double>(n) * (n + 1.0);
    // The smallest root lies in (-1 + 1/(n(n+1)), -cos(pi/n)); pad the left
    // end by half the Newton margin so both endpoint signs are certain.
    double lo = -1.0 + 0.5 / nn1;
    double hi = -std::cos(std::numbers::pi / n);

    const double f_lo = cheb_phi_scaled(n, c, lo);
    const double f_hi = cheb_phi_scaled(n, c, hi);
    if (!(f_lo * f_hi < 0.0))
        throw std::logic_error("cheb_smallest_root: bracket endpoints do not straddle a root");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (cheb_phi_scaled(n, c, mid) * f_lo > 0.0)
            lo = mid;
        else
            hi = mid;
    }

    ChebRoot root;
    root.tau = 0.5 * (lo + hi);
    root.epsilon_n = 1.0 + root.tau;

    const double eps_lower = 1.0 / nn1;
    const double s = std::sin(std::numbers::pi / (2.0 * n));
    const double eps_upper = 2.0 * s * s;
    if (!(root.epsilon_n > eps_lower) || !(root.epsilon_n < eps_upper))
        throw std::logic_error("cheb_smallest_root: root escaped its interlacing bracket");
    return root;
}

}  // namespace mbconst
