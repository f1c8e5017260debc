#include "mbconst/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mbconst {

namespace {

// Gauss-Jordan inverse with partial pivoting; oracle scale only.
DenseMatrix dense_inverse(DenseMatrix m) {
    const std::size_t n = m.n;
    DenseMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv.at(i, i) = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m.at(r, col)) > std::fabs(m.at(pivot, col)))
                pivot = r;
        if (m.at(pivot, col) == 0.0)
            throw std::runtime_error("dense_inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const double d = m.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double f = m.at(r, col);
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, bool transpose_b) {
    const std::size_t n = a.n;
    DenseMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += a.at(i, k) * (transpose_b ? b.at(j, k) : b.at(k, j));
            r.at(i, j) = s;
        }
    return r;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix r(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            r.at(i, j) = a.at(j, i);
    return r;
}

// Compares a dense matrix against the tridiagonal built by the library,
// ignoring the sign of the off-diagonal band.
double tridiag_discrepancy(const DenseMatrix& m, const SymTridiag& t) {
    double worst = 0.0;
    const std::size_t n = m.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double expected = 0.0;
            if (i == j)
                expected = t.diag[i];
            else if (j + 1 == i || i + 1 == j)
                expected = t.off[std::min(i, j)];
            worst = std::max(worst, std::fabs(std::fabs(m.at(i, j)) - expected));
        }
    return worst;
}

}  // namespace

double alpha_ratio(const MeixnerParams& params, unsigned k) {
    if (k < 1)
        throw std::domain_error("alpha_ratio: k must be >= 1");
    return std::sqrt((params.beta + k - 1) / (k * params.c));
}

SymTridiag build_B(const MeixnerParams& params, std::size_t n) {
    if (n < 1)
        throw std::domain_error("build_B: n must be >= 1");
    SymTridiag t;
    t.diag.reserve(n);
    t.off.reserve(n - 1);
    for (std::size_t k = 1; k < n; ++k)
        t.diag.push_back((params.beta + k - 1) / (k * params.c) + 1.0);
    t.diag.push_back((params.beta + n - 1) / (n * params.c));
    for (std::size_t k = 1; k < n; ++k)
        t.off.push_back(std::sqrt((params.beta + k) / ((k + 1) * params.c)));
    return t;
}

SymTridiag build_C(const MeixnerParams& params, std::size_t n) {
    if (n < 1)
        throw std::domain_error("build_C: n must be >= 1");
    SymTridiag t;
    t.diag.reserve(n);
    t.off.reserve(n - 1);
    t.diag.push_back(params.beta / params.c);
    for (std::size_t k = 2; k <= n; ++k)
        t.diag.push_back((params.beta + k - 1) / (k * params.c) + 1.0);
    for (std::size_t k = 1; k < n; ++k)
        t.off.push_back(std::sqrt((params.beta + k - 1) / (k * params.c)));
    return t;
}

DenseMatrix build_A_dense(const MeixnerParams& params, std::size_t n) {
    if (n < 1)
        throw std::domain_error("build_A_dense: n must be >= 1");
    if (n > 64)
        throw std::invalid_argument("build_A_dense: n capped at 64 (oracle use only)");
    DenseMatrix a(n);
    // Entry (i,j), 1-based, j <= i: alpha_{j-1}/alpha_i as a telescoping
    // product of inverse consecutive ratios.
    for (std::size_t i = 1; i <= n; ++i) {
        double v = 1.0;
        for (std::size_t j = i; j >= 1; --j) {
            v /= alpha_ratio(params, static_cast<unsigned>(j));
            a.at(i - 1, j - 1) = v;
        }
    }
    return a;
}

FactorizationCheck verify_factorization(const MeixnerParams& params,
                                        std::size_t n, double tol) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("verify_factorization: n must be in 1..16");

    FactorizationCheck check;

    // alpha_k is safe to materialize at this scale.
    std::vector<double> alpha(n + 1, 1.0);
    for (std::size_t k = 1; k <= n; ++k)
        alpha[k] = alpha[k - 1] * alpha_ratio(params, static_cast<unsigned>(k));

    // A = diag{1/alpha_k} T diag{alpha_{k-1}} with T the all-ones lower triangle.
    DenseMatrix a_ref(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            a_ref.at(i - 1, j - 1) = alpha[j - 1] / alpha[i];

    const DenseMatrix a = build_A_dense(params, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            check.max_error = std::max(check.max_error,
                                       std::fabs(a.at(i, j) - a_ref.at(i, j)));
    if (check.max_error > tol) {
        check.ok = false;
        check.detail = "A_n entries disagree with diagonal factorization";
        return check;
    }

    const DenseMatrix b_inv = dense_inverse(multiply(a, a, /*transpose_b=*/true));
    const double err_b = tridiag_discrepancy(b_inv, build_B(params, n));

    const DenseMatrix c_inv = dense_inverse(multiply(transpose(a), a, false));
    const double err_c = tridiag_discrepancy(c_inv, build_C(params, n));

    check.max_error = std::max({check.max_error, err_b, err_c});
    if (err_b > tol) {
        check.ok = false;
        check.detail = "(A A^T)^{-1} disagrees with build_B";
    } else if (err_c > tol) {
        check.ok = false;
        check.detail = "(A^T A)^{-1} disagrees with build_C";
    }
    return check;
}

}  // namespace mbconst
