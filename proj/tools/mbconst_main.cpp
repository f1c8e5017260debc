// mbconst: command-line front end.
//
// Subcommands: gamma, table, bounds, verify, extremal, monotone.
// Every command emits text (default), csv or json; csv/json carry 15
// significant digits, text tables 6. Exit codes: 0 success, 1 numerical
// failure or failed verification check, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mbconst/constants.hpp"
#include "mbconst/eigensolve.hpp"
#include "mbconst/matrices.hpp"
#include "mbconst/meixner.hpp"
#include "mbconst/verify.hpp"

namespace {

using nlohmann::json;

std::string fmt_sig(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

// Machine formats carry 15 significant digits; round the stored value to
// match so csv and json agree exactly.
double round_sig15(double v) {
    return std::strtod(fmt_sig(v, 15).c_str(), nullptr);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& v, int sig) {
    if (v.is_number_float())
        return fmt_sig(v.get<double>(), sig);
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void emit(const std::string& format, std::ostream& os, const json& config,
          const Table& table) {
    if (format == "csv") {
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            os << (i ? "," : "") << table.columns[i];
        os << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << cell_text(row[i], 15);
            os << "\n";
        }
        return;
    }
    if (format == "json") {
        json results = json::array();
        for (const auto& row : table.rows) {
            json r = json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                r[table.columns[i]] = row[i];
            results.push_back(std::move(r));
        }
        os << json{{"config", config}, {"results", results}}.dump(2) << "\n";
        return;
    }
    // text
    std::vector<std::size_t> width(table.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        width[i] = table.columns[i].size();
    for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell_text(row[i], 6));
            width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto pad = [&](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << pad(table.columns[i], width[i]) << (i + 1 < table.columns.size() ? "  " : "");
    os << "\n";
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i)
            os << pad(line[i], width[i]) << (i + 1 < line.size() ? "  " : "");
        os << "\n";
    }
}

// "v" is a one-point grid; "start:stop:step" includes stop when it lands
// within half a step of the last point.
std::vector<double> parse_range(const std::string& spec) {
    const auto bad = [&spec]() {
        return std::invalid_argument("malformed range '" + spec +
                                     "' (expected a number or start:stop:step)");
    };
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);

    auto to_double = [&](const std::string& s) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != s.size())
            throw bad();
        return v;
    };

    if (parts.size() == 1)
        return {to_double(parts[0])};
    if (parts.size() != 3)
        throw bad();

    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0))
        throw std::invalid_argument("range '" + spec + "' must have a positive step");

    std::vector<double> values;
    for (double v = start; v <= stop + 0.5 * step; v += step)
        values.push_back(v);
    if (values.empty())
        throw std::invalid_argument("range '" + spec + "' produces an empty grid");
    return values;
}

std::vector<std::size_t> parse_index_range(const std::string& spec, std::size_t min_value) {
    std::vector<std::size_t> out;
    for (double v : parse_range(spec)) {
        const double r = std::round(v);
        if (std::fabs(v - r) > 1e-9 || r < static_cast<double>(min_value))
            throw std::invalid_argument("'" + spec + "': n values must be integers >= " +
                                        std::to_string(min_value));
        out.push_back(static_cast<std::size_t>(r));
    }
    return out;
}

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    double tol = 1e-12;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write output to this path instead of stdout");
    cmd->add_option("--tol", opts.tol, "Root/eigenvalue tolerance")->capture_default_str();
}

int write_output(const CommonOpts& opts, const json& config, const Table& table) {
    if (opts.out_path.empty()) {
        emit(opts.format, std::cout, config, table);
        return 0;
    }
    std::ofstream f(opts.out_path);
    if (!f)
        throw std::runtime_error("cannot open output file '" + opts.out_path + "'");
    emit(opts.format, f, config, table);
    return 0;
}

std::vector<json> gamma_row(const mbconst::GammaResult& g) {
    return {g.n, round_sig15(g.params.c), round_sig15(g.params.beta),
            round_sig15(g.lambda_min), round_sig15(g.gamma),
            std::string(mbconst::method_name(g.method))};
}

const std::vector<std::string> kGammaColumns = {"n", "c", "beta", "lambda_min",
                                                "gamma", "method"};

int run_gamma(double c, double beta, std::size_t n, const std::string& method,
              const CommonOpts& opts) {
    const mbconst::MeixnerParams params(c, beta);
    const auto result =
        mbconst::gamma_n(params, n, mbconst::method_from_name(method), opts.tol);
    Table t{kGammaColumns, {gamma_row(result)}};
    json config{{"command", "gamma"}, {"c", c},           {"beta", beta},
                {"n", n},             {"method", method}, {"tol", opts.tol}};
    return write_output(opts, config, t);
}

int run_table(double c, const std::string& beta_spec, const std::string& n_spec,
              const std::string& method, const CommonOpts& opts) {
    const auto betas = parse_range(beta_spec);
    const auto ns = parse_index_range(n_spec, 1);
    const auto m = mbconst::method_from_name(method);

    Table t{kGammaColumns, {}};
    for (std::size_t n : ns)
        for (double beta : betas)
            t.rows.push_back(gamma_row(mbconst::gamma_n({c, beta}, n, m, opts.tol)));
    json config{{"command", "table"}, {"c", c},           {"beta", beta_spec},
                {"n", n_spec},        {"method", method}, {"tol", opts.tol}};
    return write_output(opts, config, t);
}

int run_bounds(double c, const std::string& n_spec, const CommonOpts& opts) {
    Table t{{"n", "c", "lower", "upper", "epsilon_lower", "epsilon_upper"}, {}};
    for (std::size_t n : parse_index_range(n_spec, 2)) {
        const auto b = mbconst::bounds_beta1(c, n);
        t.rows.push_back({b.n, round_sig15(b.c), round_sig15(b.lower),
                          round_sig15(b.upper), round_sig15(b.epsilon_lower),
                          round_sig15(b.epsilon_upper)});
    }
    json config{{"command", "bounds"}, {"c", c}, {"n", n_spec}, {"tol", opts.tol}};
    return write_output(opts, config, t);
}

int run_extremal(double c, const std::string& n_spec, const CommonOpts& opts) {
    Table t{{"n", "c", "ratio", "lower_bound", "limit"}, {}};
    const double limit = 1.0 + 1.0 / std::sqrt(c);
    for (std::size_t n : parse_index_range(n_spec, 1)) {
        const double ratio = mbconst::extremal_sequence_ratio(c, n);
        const double nd = static_cast<double>(n);
        t.rows.push_back({n, round_sig15(c), round_sig15(ratio),
                          round_sig15(std::sqrt(nd / (nd + 1.0)) * limit),
                          round_sig15(limit)});
    }
    json config{{"command", "extremal"}, {"c", c}, {"n", n_spec}};
    return write_output(opts, config, t);
}

int run_monotone(double c, std::size_t n, const std::string& beta_spec,
                 const CommonOpts& opts) {
    const auto betas = parse_range(beta_spec);
    const auto report = mbconst::monotonicity_scan(c, n, betas, opts.tol);

    Table t{{"beta", "lambda_min", "gamma", "chain_ok"}, {}};
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const double lambda = report.lambda_values[i];
        t.rows.push_back({round_sig15(betas[i]), round_sig15(lambda),
                          round_sig15((1.0 / c - 1.0) / std::sqrt(lambda)),
                          report.chain_ok[i]});
    }
    json config{{"command", "monotone"}, {"c", c},       {"n", n},
                {"beta", beta_spec},     {"tol", opts.tol}};
    return write_output(opts, config, t);
}

int run_verify(double c, double beta, std::size_t n, const CommonOpts& opts) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("verify: n must be in 1..12 (oracle gate)");
    const mbconst::MeixnerParams params(c, beta);

    Table t{{"check", "pass", "detail"}, {}};
    std::string first_failure;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        t.rows.push_back({name, pass, detail});
        if (!pass && first_failure.empty())
            first_failure = name;
    };

    const auto oracle = mbconst::oracle_gamma(params, n, opts.tol);
    const auto matrix = mbconst::gamma_n(params, n, mbconst::Method::automatic, opts.tol);
    {
        const double rel = std::fabs(oracle.gamma_oracle - matrix.gamma) / matrix.gamma;
        record("oracle_agreement", rel < 1e-7,
               "oracle=" + fmt_sig(oracle.gamma_oracle, 15) +
                   " matrix=" + fmt_sig(matrix.gamma, 15) + " rel=" + fmt_sig(rel, 3));
    }
    {
        const auto eig = mbconst::jacobi_eigenvalues(oracle.gram);
        record("gram_positive_semidefinite", eig.front() >= -1e-10,
               "lambda_min(gram)=" + fmt_sig(eig.front(), 6));
    }
    {
        const auto a = mbconst::build_A_dense(params, n);
        const double scale = (1.0 - 1.0 / c) * (1.0 - 1.0 / c);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double aat = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    aat += a.at(i, k) * a.at(j, k);
                worst = std::max(worst, std::fabs(oracle.gram.at(i, j) - scale * aat));
            }
        record("gram_factorization_identity", worst < 1e-8,
               "max entrywise error=" + fmt_sig(worst, 3));
    }
    {
        bool all = true;
        if (n >= 2)
            for (bool b : mbconst::chain_condition_check(params, n))
                all = all && b;
        record("chain_condition", all, n >= 2 ? "k=1.." + std::to_string(n - 1) : "vacuous for n=1");
    }
    {
        bool pass = true;
        std::string detail;
        try {
            mbconst::monotonicity_scan(c, n, {0.5, 1.0, 2.0, 4.0, 8.0}, opts.tol);
            detail = "lambda_min(B) increasing over beta={0.5,1,2,4,8}";
        } catch (const std::runtime_error& e) {
            pass = false;
            detail = e.what();
        }
        record("beta_monotonicity", pass, detail);
    }
    {
        const double bound = mbconst::sequence_bound(params);
        record("sequence_ceiling", matrix.gamma < bound + 1e-9,
               "gamma=" + fmt_sig(matrix.gamma, 15) + " bound=" + fmt_sig(bound, 15));
    }
    if (beta == 1.0 && n >= 2) {
        const auto b = mbconst::bounds_beta1(c, n);
        record("beta1_sandwich", b.lower <= matrix.gamma && matrix.gamma <= b.upper,
               "lower=" + fmt_sig(b.lower, 15) + " upper=" + fmt_sig(b.upper, 15));
    }
    {
        bool pass = true;
        const double limit = 1.0 + 1.0 / std::sqrt(c);
        for (std::size_t m : {std::size_t{1}, std::size_t{10}, std::size_t{100},
                              std::size_t{1000}}) {
            const double ratio = mbconst::extremal_sequence_ratio(c, m);
            const double md = static_cast<double>(m);
            pass = pass && ratio > std::sqrt(md / (md + 1.0)) * limit && ratio < limit;
        }
        record("sharpness_sequence", pass, "n in {1,10,100,1000}");
    }

    json config{{"command", "verify"}, {"c", c}, {"beta", beta}, {"n", n}, {"tol", opts.tol}};
    if (opts.format == "text" && opts.out_path.empty()) {
        for (const auto& row : t.rows)
            std::cout << (row[1].get<bool>() ? "PASS" : "FAIL") << "  "
                      << row[0].get<std::string>() << "  (" << row[2].get<std::string>()
                      << ")\n";
    } else {
        write_output(opts, config, t);
    }
    if (!first_failure.empty()) {
        std::cerr << "verify: first failing check: " << first_failure << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp constants of the discrete Markov-Bernstein inequality in Meixner norms"};
    app.require_subcommand(1);

    double c = 0.5;
    double beta = 1.0;
    std::size_t n = 1;
    std::string beta_spec = "1";
    std::string n_spec = "1";
    std::string method = "automatic";
    CommonOpts opts;

    auto* cmd_gamma = app.add_subcommand("gamma", "Compute gamma_n(c, beta)");
    cmd_gamma->add_option("--c", c, "Meixner parameter c in (0,1)")->required();
    cmd_gamma->add_option("--beta", beta, "Meixner parameter beta > 0")->required();
    cmd_gamma->add_option("--n", n, "Polynomial degree n >= 1")->required();
    cmd_gamma->add_option("--method", method,
                          "Engine: automatic|sturm_B|sturm_C|charpoly|chebyshev");
    add_common(cmd_gamma, opts);

    auto* cmd_table = app.add_subcommand("table", "gamma_n over a (n, beta) grid");
    cmd_table->add_option("--c", c)->required();
    cmd_table->add_option("--beta", beta_spec, "beta value or range start:stop:step");
    cmd_table->add_option("--n", n_spec, "n value or range start:stop:step")->required();
    cmd_table->add_option("--method", method);
    add_common(cmd_table, opts);

    auto* cmd_bounds = app.add_subcommand("bounds", "Two-sided estimates of gamma_n(c,1)");
    cmd_bounds->add_option("--c", c)->required();
    cmd_bounds->add_option("--n", n_spec, "n value or range, n >= 2")->required();
    add_common(cmd_bounds, opts);

    auto* cmd_verify = app.add_subcommand("verify", "Run the independent oracle checks");
    cmd_verify->add_option("--c", c)->required();
    cmd_verify->add_option("--beta", beta);
    cmd_verify->add_option("--n", n, "Oracle size, 1..12");
    add_common(cmd_verify, opts);

    auto* cmd_extremal = app.add_subcommand("extremal", "Norm ratio of the extremal sequence");
    cmd_extremal->add_option("--c", c)->required();
    cmd_extremal->add_option("--n", n_spec, "n value or range")->required();
    add_common(cmd_extremal, opts);

    auto* cmd_monotone = app.add_subcommand("monotone", "lambda_min(B_n) along a beta grid");
    cmd_monotone->add_option("--c", c)->required();
    cmd_monotone->add_option("--n", n, "Matrix size n >= 1")->required();
    cmd_monotone->add_option("--beta", beta_spec, "beta range start:stop:step")->required();
    add_common(cmd_monotone, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_gamma->parsed())
            return run_gamma(c, beta, n, method, opts);
        if (cmd_table->parsed())
            return run_table(c, beta_spec, n_spec, method, opts);
        if (cmd_bounds->parsed())
            return run_bounds(c, n_spec, opts);
        if (cmd_verify->parsed())
            return run_verify(c, beta, n, opts);
        if (cmd_extremal->parsed())
            return run_extremal(c, n_spec, opts);
        if (cmd_monotone->parsed())
            return run_monotone(c, n, beta_spec, opts);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
