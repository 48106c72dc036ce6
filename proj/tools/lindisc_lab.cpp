#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lindisc/pipeline.hpp"

namespace {

using namespace lindisc;

PipelineMode resolve_mode(const std::string &mode, const QuantifiedNaeFormula &qf) {
    if (mode == "np") {
        return PipelineMode::Np;
    }
    if (mode == "pi2") {
        return PipelineMode::Pi2;
    }
    return qf.n_universal > 0 ? PipelineMode::Pi2 : PipelineMode::Np;
}

ReducedInstance reduce_formula(const QuantifiedNaeFormula &qf, PipelineMode mode) {
    if (mode == PipelineMode::Np) {
        if (qf.n_universal != 0) {
            throw PreconditionError("np reduction requires a formula without universal variables");
        }
        return build_np_matrix(qf.formula);
    }
    return build_pi2_matrix(qf);
}

std::string format_x(const std::vector<int> &x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(x[i]);
    }
    return s;
}

std::string format_bits(const Assignment &a) {
    if (a.bits.empty()) {
        return "-";
    }
    std::string s;
    for (auto b : a.bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

int run_reduce(const std::string &path, const std::string &mode, const std::string &out_path) {
    QuantifiedNaeFormula qf = parse_formula_file(path);
    ReducedInstance inst = reduce_formula(qf, resolve_mode(mode, qf));
    if (out_path.empty()) {
        write_instance(std::cout, inst);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw Error("cannot write '" + out_path + "'");
        }
        write_instance(out, inst);
    }
    return 0;
}

int run_lindisc_at(const std::string &matrix_path, const std::string &point_path, bool at_half,
                   int limit) {
    RMatrix a = read_matrix_file(matrix_path);
    RVector w;
    if (at_half) {
        w = RVector::constant(a.cols(), Rational(1, 2));
    } else if (!point_path.empty()) {
        w = read_vector_file(point_path);
    } else {
        throw Error("pass a point file or --half");
    }
    InnerResult res = lindisc_at(a, w, limit);
    std::cout << "value=" << res.value << " x=" << format_x(res.argmin_x)
              << " nodes=" << res.nodes_explored << "\n";
    return 0;
}

int run_lindisc(const std::string &matrix_path, const std::string &eps_text,
                std::uint64_t budget) {
    RMatrix a = read_matrix_file(matrix_path);
    BnbOptions opt;
    opt.node_budget = budget;
    Certificate cert = lindisc_global(a, Rational::parse(eps_text), opt);
    std::cout << cert.to_line() << "\n";
    if (!cert.complete) {
        std::cerr << "node budget exhausted; enclosure is valid but wider than eps\n";
        return 2;
    }
    return 0;
}

int run_round_gadget(const std::vector<std::string> &coords, int sign) {
    if (coords.size() != 3) {
        throw Error("round-gadget expects exactly three coordinates");
    }
    std::array<Rational, 3> u = {Rational::parse(coords[0]), Rational::parse(coords[1]),
                                 Rational::parse(coords[2])};
    GadgetRounding r = round_gadget(u, sign);
    std::cout << "z=" << r.z[0] << "," << r.z[1] << "," << r.z[2]
              << " case=" << to_string(r.case_tag) << (r.flipped ? " (complemented)" : "")
              << " norm=" << r.g_norm << " sum_dev=" << r.sum_dev << "\n";
    return 0;
}

int run_solve_nae(const std::string &path, int limit) {
    QuantifiedNaeFormula qf = parse_formula_file(path);
    if (qf.n_universal == 0) {
        auto psi = solve_nae(qf.formula, limit);
        if (psi) {
            std::cout << "SATISFIABLE " << format_bits(*psi) << "\n";
        } else {
            std::cout << "UNSATISFIABLE\n";
        }
        return 0;
    }
    ForallExistsVerdict v = solve_forall_exists(qf, limit);
    if (v.yes) {
        std::cout << "YES\n";
        for (std::size_t c = 0; c < v.witnesses.size(); ++c) {
            std::cout << "universal " << format_bits(Assignment::from_code(c, qf.n_universal))
                      << " -> witness " << format_bits(v.witnesses[c]) << "\n";
        }
    } else {
        std::cout << "NO counterexample=" << format_bits(*v.counterexample) << "\n";
    }
    return 0;
}

int run_grid_oracle(const std::string &matrix_path, int resolution) {
    RMatrix a = read_matrix_file(matrix_path);
    std::cout << "value=" << grid_oracle(a, resolution) << "\n";
    return 0;
}

int run_verify_gap(const std::string &path, const std::string &mode, int samples,
                   std::uint64_t seed, const std::string &eps_text, bool certify,
                   const std::string &format) {
    QuantifiedNaeFormula qf = parse_formula_file(path);
    PipelineOptions opt;
    opt.mode = resolve_mode(mode, qf);
    opt.samples = samples;
    opt.seed = seed;
    opt.eps = Rational::parse(eps_text);
    opt.certify = certify;
    GapReport report = verify_gap_pipeline(qf, path, opt);
    if (format == "text" || format == "both") {
        std::cout << report.to_text();
    }
    if (format == "machine" || format == "both") {
        std::cout << report.to_machine();
    }
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"linear-discrepancy laboratory: reductions, gadget rounding, exact solvers"};
    app.require_subcommand(1);

    std::string formula_path, matrix_path, point_path, out_path;
    std::string mode = "auto";
    std::string eps_text = "1/20";
    std::string format = "both";
    std::vector<std::string> coords;
    int sign = 1;
    int resolution = 2;
    int samples = 1000;
    int limit = kDefaultInnerLimit;
    std::uint64_t seed = 42;
    std::uint64_t budget = 10'000'000;
    bool at_half = false;
    bool certify = false;

    auto *reduce = app.add_subcommand("reduce", "compile a formula to its discrepancy matrix");
    reduce->add_option("formula", formula_path, "DIMACS/QDIMACS file")->required();
    reduce->add_option("--mode", mode, "np, pi2 or auto")->check(CLI::IsMember({"auto", "np", "pi2"}));
    reduce->add_option("-o,--output", out_path, "output file (default stdout)");

    auto *at = app.add_subcommand("lindisc-at", "exact inner value at a point");
    at->add_option("matrix", matrix_path, "matrix file")->required();
    at->add_option("point", point_path, "vector file");
    at->add_flag("--half", at_half, "use the all-halves point");
    at->add_option("--limit", limit, "exhaustive column limit");

    auto *global = app.add_subcommand("lindisc", "certified global maximization");
    global->add_option("matrix", matrix_path, "matrix file")->required();
    global->add_option("--eps", eps_text, "target enclosure width");
    global->add_option("--budget", budget, "node budget");

    auto *gadget = app.add_subcommand("round-gadget", "round a point of the unit 3-cube");
    gadget->add_option("u", coords, "three rationals in [0,1]")->expected(3);
    gadget->add_option("--sign", sign, "+1 or -1")->check(CLI::IsMember({1, -1}));

    auto *solve = app.add_subcommand("solve-nae", "brute-force NAE / forall-exists solve");
    solve->add_option("formula", formula_path, "DIMACS/QDIMACS file")->required();
    solve->add_option("--limit", limit, "exhaustive variable limit");

    auto *grid = app.add_subcommand("grid-oracle", "max inner value over a uniform grid");
    grid->add_option("matrix", matrix_path, "matrix file")->required();
    grid->add_option("--resolution", resolution, "grid steps per axis");

    auto *verify = app.add_subcommand("verify-gap", "end-to-end completeness/soundness check");
    verify->add_option("formula", formula_path, "DIMACS/QDIMACS file")->required();
    verify->add_option("--mode", mode, "np, pi2 or auto")->check(CLI::IsMember({"auto", "np", "pi2"}));
    verify->add_option("--samples", samples, "random witness points");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--eps", eps_text, "certification slack");
    verify->add_flag("--certify", certify, "run the branch-and-bound certificate");
    verify->add_option("--format", format, "text, machine or both")
        ->check(CLI::IsMember({"text", "machine", "both"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce->parsed()) {
            return run_reduce(formula_path, mode, out_path);
        }
        if (at->parsed()) {
            return run_lindisc_at(matrix_path, point_path, at_half, limit);
        }
        if (global->parsed()) {
            return run_lindisc(matrix_path, eps_text, budget);
        }
        if (gadget->parsed()) {
            return run_round_gadget(coords, sign);
        }
        if (solve->parsed()) {
            return run_solve_nae(formula_path, limit);
        }
        if (grid->parsed()) {
            return run_grid_oracle(matrix_path, resolution);
        }
        if (verify->parsed()) {
            return run_verify_gap(formula_path, mode, samples, seed, eps_text, certify, format);
        }
    } catch (const lindisc::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
