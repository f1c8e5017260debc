#include "mbconst/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mbconst/eigensolve.hpp"

namespace mbconst {

std::vector<double> jacobi_eigenvalues(DenseMatrix m) {
    const std::size_t n = m.n;
    if (n == 0)
        throw std::domain_error("jacobi_eigenvalues: empty matrix");

    double fro = 0.0;
    for (double v : m.data)
        fro += v * v;
    fro = std::sqrt(fro);
    const double threshold = 1e-14 * std::max(1.0, fro);

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += 2.0 * m.at(i, j) * m.at(i, j);
        if (std::sqrt(off) <= threshold)
            break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0)
                    t = -t;
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * cs;

                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m.at(k, p);
                    const double mkq = m.at(k, q);
                    m.at(k, p) = cs * mkp - sn * mkq;
                    m.at(k, q) = sn * mkp + cs * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m.at(p, k);
                    const double mqk = m.at(q, k);
                    m.at(p, k) = cs * mpk - sn * mqk;
                    m.at(q, k) = sn * mpk + cs * mqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = m.at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

OracleReport oracle_gamma(const MeixnerParams& params, std::size_t n,
                          double trunc_tol) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("oracle_gamma: n must be in 1..12 (dense oracle scale)");
    if (!(trunc_tol > 0.0))
        throw std::domain_error("oracle_gamma: trunc_tol must be positive");

    OracleReport report{n, params, DenseMatrix(n), 0.0, 0.0};

    auto delta_p = [&params](std::size_t m) {
        return [&params, m](double x) {
            return forward_difference(
                [&params, m](double y) {
                    return orthonormal_meixner(params, static_cast<unsigned>(m), y);
                },
                x);
        };
    };

    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            const TruncatedSum s =
                inner_product(params, delta_p(i), delta_p(j), trunc_tol);
            report.gram.at(i - 1, j - 1) = s.value;
            report.gram.at(j - 1, i - 1) = s.value;
            report.max_tail_bound = std::max(report.max_tail_bound, s.tail_bound);
        }
    }

    const std::vector<double> eig = jacobi_eigenvalues(report.gram);
    report.gamma_oracle = std::sqrt(std::max(0.0, eig.back()));
    return report;
}

double extremal_sequence_ratio(double c, std::size_t n) {
    if (!(c > 0.0) || !(c < 1.0))
        throw std::domain_error("extremal_sequence_ratio: c must lie in (0,1)");
    if (n < 1)
        throw std::domain_error("extremal_sequence_ratio: n must be >= 1");

    const double bound = 1.0 + 1.0 / std::sqrt(c);
    const double nd = static_cast<double>(n);
    const double ratio = std::sqrt((nd * bound * bound + 1.0) / (nd + 1.0));

    // Direct summation over the finite support, skipped once c^{-n/2}
    // overflows. The sums are finite so no tail estimate is involved.
    if (0.5 * (nd + 1.0) * std::log(1.0 / c) < 700.0) {
        const MeixnerParams params(c, 1.0);
        auto f = [c, n](double x) {
            const auto k = static_cast<long long>(std::llround(x));
            if (k < 0 || k > static_cast<long long>(n))
                return 0.0;
            const double v = std::pow(c, -0.5 * static_cast<double>(k));
            return (k % 2 == 0) ? v : -v;
        };
        double norm2 = 0.0;
        double dnorm2 = 0.0;
        for (std::size_t k = 0; k <= n + 1; ++k) {
            const double w = weight(params, static_cast<unsigned>(k));
            const double fk = f(static_cast<double>(k));
            const double dfk = forward_difference(f, static_cast<double>(k));
            norm2 += w * fk * fk;
            dnorm2 += w * dfk * dfk;
        }
        const double direct = std::sqrt(dnorm2 / norm2);
        if (std::fabs(direct - ratio) > 1e-10 * ratio)
            throw std::logic_error("extremal_sequence_ratio: closed form and direct "
                                   "summation disagree");
    }
    return ratio;
}

std::vector<bool> chain_condition_check(const MeixnerParams& params, std::size_t n) {
    if (n < 2)
        throw std::domain_error("chain_condition_check: n must be >= 2");

    std::vector<bool> ok(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const double d_k = 1.0 / (k * params.c);
        const double d_k1 = 1.0 / ((k + 1) * params.c);
        const double e_k = 1.0 / (2.0 * std::sqrt((k + 1) * (k + params.beta) * params.c));
        const bool ratio_form = e_k * e_k / (d_k * d_k1) < 0.25;
        const bool linear_form = params.beta + k * (1.0 - params.c) > 0.0;
        if (ratio_form != linear_form)
            throw std::logic_error("chain_condition_check: the two equivalent forms "
                                   "disagree at k=" + std::to_string(k));
        ok[k - 1] = ratio_form;
    }
    return ok;
}

MonotoneReport monotonicity_scan(double c, std::size_t n,
                                 const std::vector<double>& beta_grid,
                                 double tol) {
    if (beta_grid.empty())
        throw std::domain_error("monotonicity_scan: empty beta grid");
    for (std::size_t i = 0; i + 1 < beta_grid.size(); ++i)
        if (!(beta_grid[i] < beta_grid[i + 1]))
            throw std::domain_error("monotonicity_scan: beta grid must be strictly increasing");

    MonotoneReport report;
    report.c = c;
    report.n = n;
    report.beta_grid = beta_grid;
    report.lambda_values.reserve(beta_grid.size());
    report.chain_ok.reserve(beta_grid.size());

    for (double beta : beta_grid) {
        const MeixnerParams params(c, beta);
        report.lambda_values.push_back(smallest_eigenvalue(build_B(params, n)).value);
        bool all_ok = true;
        if (n >= 2)
            for (bool b : chain_condition_check(params, n))
                all_ok = all_ok && b;
        report.chain_ok.push_back(all_ok);
    }

    for (std::size_t i = 0; i + 1 < report.lambda_values.size(); ++i) {
        const double step = report.lambda_values[i + 1] - report.lambda_values[i];
        const bool chained = report.chain_ok[i] && report.chain_ok[i + 1];
        if (step <= -tol || (chained && step <= 0.0)) {
            std::ostringstream msg;
            msg << "monotonicity_scan: lambda_min not increasing between beta="
                << report.beta_grid[i] << " and beta=" << report.beta_grid[i + 1]
                << " (" << report.lambda_values[i] << " -> "
                << report.lambda_values[i + 1] << ")";
            throw std::runtime_error(msg.str());
        }
    }
    return report;
}

}  // namespace mbconst
