#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbconst/constants.hpp"
#include "mbconst/eigensolve.hpp"
#include "mbconst/matrices.hpp"
#include "mbconst/meixner.hpp"
#include "mbconst/verify.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<double>> dense_rows(const mbconst::DenseMatrix& m) {
    std::vector<std::vector<double>> rows(m.n, std::vector<double>(m.n));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sharp constants of the discrete Markov-Bernstein inequality in Meixner norms";

    py::class_<mbconst::MeixnerParams>(m, "MeixnerParams")
        .def(py::init<double, double>(), py::arg("c"), py::arg("beta"))
        .def_readonly("c", &mbconst::MeixnerParams::c)
        .def_readonly("beta", &mbconst::MeixnerParams::beta)
        .def("__repr__", [](const mbconst::MeixnerParams& p) {
            return "MeixnerParams(c=" + std::to_string(p.c) +
                   ", beta=" + std::to_string(p.beta) + ")";
        });

    py::class_<mbconst::TruncatedSum>(m, "TruncatedSum")
        .def_readonly("value", &mbconst::TruncatedSum::value)
        .def_readonly("terms_used", &mbconst::TruncatedSum::terms_used)
        .def_readonly("tail_bound", &mbconst::TruncatedSum::tail_bound);

    py::class_<mbconst::SymTridiag>(m, "SymTridiag")
        .def_readonly("diag", &mbconst::SymTridiag::diag)
        .def_readonly("off", &mbconst::SymTridiag::off)
        .def("__len__", &mbconst::SymTridiag::size);

    py::class_<mbconst::DenseMatrix>(m, "DenseMatrix")
        .def_readonly("n", &mbconst::DenseMatrix::n)
        .def("rows", &dense_rows);

    py::class_<mbconst::EigenEstimate>(m, "EigenEstimate")
        .def_readonly("value", &mbconst::EigenEstimate::value)
        .def_readonly("bracket_width", &mbconst::EigenEstimate::bracket_width)
        .def_readonly("iterations", &mbconst::EigenEstimate::iterations);

    py::class_<mbconst::ChebRoot>(m, "ChebRoot")
        .def_readonly("tau", &mbconst::ChebRoot::tau)
        .def_readonly("epsilon_n", &mbconst::ChebRoot::epsilon_n);

    py::class_<mbconst::GammaResult>(m, "GammaResult")
        .def_readonly("n", &mbconst::GammaResult::n)
        .def_readonly("params", &mbconst::GammaResult::params)
        .def_readonly("lambda_min", &mbconst::GammaResult::lambda_min)
        .def_readonly("gamma", &mbconst::GammaResult::gamma)
        .def_property_readonly("method",
                               [](const mbconst::GammaResult& g) {
                                   return std::string(mbconst::method_name(g.method));
                               })
        .def_readonly("tol", &mbconst::GammaResult::tol)
        .def_readonly("iterations", &mbconst::GammaResult::iterations);

    py::class_<mbconst::BoundsReport>(m, "BoundsReport")
        .def_readonly("n", &mbconst::BoundsReport::n)
        .def_readonly("c", &mbconst::BoundsReport::c)
        .def_readonly("lower", &mbconst::BoundsReport::lower)
        .def_readonly("upper", &mbconst::BoundsReport::upper)
        .def_readonly("epsilon_lower", &mbconst::BoundsReport::epsilon_lower)
        .def_readonly("epsilon_upper", &mbconst::BoundsReport::epsilon_upper);

    py::class_<mbconst::FactorizationCheck>(m, "FactorizationCheck")
        .def_readonly("ok", &mbconst::FactorizationCheck::ok)
        .def_readonly("max_error", &mbconst::FactorizationCheck::max_error)
        .def_readonly("detail", &mbconst::FactorizationCheck::detail);

    py::class_<mbconst::OracleReport>(m, "OracleReport")
        .def_readonly("n", &mbconst::OracleReport::n)
        .def_readonly("params", &mbconst::OracleReport::params)
        .def_property_readonly("gram",
                               [](const mbconst::OracleReport& r) {
                                   return dense_rows(r.gram);
                               })
        .def_readonly("gamma_oracle", &mbconst::OracleReport::gamma_oracle)
        .def_readonly("max_tail_bound", &mbconst::OracleReport::max_tail_bound);

    py::class_<mbconst::MonotoneReport>(m, "MonotoneReport")
        .def_readonly("c", &mbconst::MonotoneReport::c)
        .def_readonly("n", &mbconst::MonotoneReport::n)
        .def_readonly("beta_grid", &mbconst::MonotoneReport::beta_grid)
        .def_readonly("lambda_values", &mbconst::MonotoneReport::lambda_values)
        .def_readonly("chain_ok", &mbconst::MonotoneReport::chain_ok);

    m.def("pochhammer", &mbconst::pochhammer, py::arg("beta"), py::arg("k"));
    m.def("weight", &mbconst::weight, py::arg("params"), py::arg("k"));
    m.def("meixner_poly", &mbconst::meixner_poly, py::arg("params"), py::arg("n"),
          py::arg("x"));
    m.def("orthonormal_meixner", &mbconst::orthonormal_meixner, py::arg("params"),
          py::arg("m"), py::arg("x"));
    m.def(
        "forward_difference",
        [](const std::function<double(double)>& f, double x) {
            return mbconst::forward_difference(f, x);
        },
        py::arg("f"), py::arg("x"));
    m.def("inner_product", &mbconst::inner_product, py::arg("params"), py::arg("f"),
          py::arg("g"), py::arg("tol") = 1e-12, py::arg("max_terms") = 100000);
    m.def("meixner_norm", &mbconst::meixner_norm, py::arg("params"), py::arg("f"),
          py::arg("tol") = 1e-12, py::arg("max_terms") = 100000);

    m.def("alpha_ratio", &mbconst::alpha_ratio, py::arg("params"), py::arg("k"));
    m.def("build_B", &mbconst::build_B, py::arg("params"), py::arg("n"));
    m.def("build_C", &mbconst::build_C, py::arg("params"), py::arg("n"));
    m.def(
        "build_A_dense",
        [](const mbconst::MeixnerParams& p, std::size_t n) {
            return dense_rows(mbconst::build_A_dense(p, n));
        },
        py::arg("params"), py::arg("n"));
    m.def("verify_factorization", &mbconst::verify_factorization, py::arg("params"),
          py::arg("n"), py::arg("tol") = 1e-10);

    m.def("sturm_count", &mbconst::sturm_count, py::arg("T"), py::arg("x"));
    m.def("smallest_eigenvalue", &mbconst::smallest_eigenvalue, py::arg("T"),
          py::arg("tol") = 1e-12);
    m.def("charpoly_smallest_zero", &mbconst::charpoly_smallest_zero, py::arg("params"),
          py::arg("n"), py::arg("tol") = 1e-12);
    m.def("cheb_phi", &mbconst::cheb_phi, py::arg("n"), py::arg("c"), py::arg("z"));
    m.def("cheb_smallest_root", &mbconst::cheb_smallest_root, py::arg("n"), py::arg("c"),
          py::arg("tol") = 1e-12);

    m.def(
        "gamma_n",
        [](const mbconst::MeixnerParams& p, std::size_t n, const std::string& method,
           double tol) {
            return mbconst::gamma_n(p, n, mbconst::method_from_name(method), tol);
        },
        py::arg("params"), py::arg("n"), py::arg("method") = "automatic",
        py::arg("tol") = 1e-12);
    m.def("sequence_bound", &mbconst::sequence_bound, py::arg("params"));
    m.def("bounds_beta1", &mbconst::bounds_beta1, py::arg("c"), py::arg("n"));
    m.def("epsilon_bounds", &mbconst::epsilon_bounds, py::arg("n"));

    m.def(
        "jacobi_eigenvalues",
        [](const std::vector<std::vector<double>>& rows) {
            const std::size_t n = rows.size();
            mbconst::DenseMatrix mat(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (rows[i].size() != n)
                    throw std::invalid_argument("jacobi_eigenvalues: matrix must be square");
                for (std::size_t j = 0; j < n; ++j)
                    mat.at(i, j) = rows[i][j];
            }
            return mbconst::jacobi_eigenvalues(mat);
        },
        py::arg("matrix"));
    m.def("oracle_gamma", &mbconst::oracle_gamma, py::arg("params"), py::arg("n"),
          py::arg("trunc_tol") = 1e-12);
    m.def("extremal_sequence_ratio", &mbconst::extremal_sequence_ratio, py::arg("c"),
          py::arg("n"));
    m.def("chain_condition_check", &mbconst::chain_condition_check, py::arg("params"),
          py::arg("n"));
    m.def("monotonicity_scan", &mbconst::monotonicity_scan, py::arg("c"), py::arg("n"),
          py::arg("beta_grid"), py::arg("tol") = 1e-12);

#ifdef MBCONST_VERSION
    m.attr("__version__") = MBCONST_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
