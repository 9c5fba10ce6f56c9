#include "lingame/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lingame/constructions.hpp"
#include "lingame/errors.hpp"
#include "lingame/lowerbound.hpp"
#include "lingame/report.hpp"
#include "lingame/smallcase.hpp"

namespace lingame {

namespace {

std::string read_input(const std::string& path, std::istream* in) {
    if (path == "-") {
        std::istream& src = in ? *in : std::cin;
        std::ostringstream buf;
        buf << src.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

struct GlobalOptions {
    int workers = 1;
    std::uint64_t naive_budget = 1'000'000'000;
    std::uint64_t path_steps = 5'000'000;
    std::uint64_t path_evals = 2'000'000'000;
    std::uint64_t spectral_cap = 1'000'000;
    std::uint64_t subset_budget = 10'000'000;
    std::uint64_t chi_budget = 2'000'000;
    std::uint64_t min_d_budget = 2'000'000'000;
    int gn_cap = 5;
    int perm_cap = 6;

    ClassicalBudget classical() const {
        return ClassicalBudget{naive_budget, path_steps, path_evals, workers};
    }
};

ClassicalResult solve_with(const GameMatrix& m, const std::string& algorithm,
                           const GlobalOptions& g, std::ostream& err) {
    ClassicalBudget budget = g.classical();
    if (algorithm == "naive") return contradiction_number_naive(m, budget);
    if (algorithm == "path-gauge") return contradiction_number_path_gauge(m, budget);
    // auto: naive when affordable, else the path gauge
    Int cost = 1;
    for (int i = 1; i < m.rows(); ++i) cost *= m.modulus();
    cost *= m.rows() * m.cols();
    if (cost <= budget.naive_ops) return contradiction_number_naive(m, budget);
    err << "note: naive sweep needs " << cost.str() << " evaluations; using the path gauge\n";
    return contradiction_number_path_gauge(m, budget);
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream* in) {
    CLI::App app{"linear nonlocal games: exact classical values, girth certificates, "
                 "spectral quantum bounds and output-count lower bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--workers", g.workers, "worker threads for sharded sweeps");
    app.add_option("--naive-budget", g.naive_budget, "residue-evaluation cap for the naive solver");
    app.add_option("--path-steps", g.path_steps, "path-extension cap for the path gauge");
    app.add_option("--path-evals", g.path_evals, "candidate-product cap for the path gauge");
    app.add_option("--spectral-cap", g.spectral_cap, "largest d-1 the power-norm sum will attempt");
    app.add_option("--subset-budget", g.subset_budget, "subset-sum enumeration cap");
    app.add_option("--chi-budget", g.chi_budget, "node cap for the exact coloring search");
    app.add_option("--min-d-budget", g.min_d_budget, "evaluation cap for the min-d sweep");
    app.add_option("--gn-cap", g.gn_cap, "largest n for the permutation graph");
    app.add_option("--perm-cap", g.perm_cap, "largest n for the permutation certificate");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a game file");
    construct->require_subcommand(1);
    int rows = 0, cols = 0, rn = 0, rs = 0;
    auto* c_binary = construct->add_subcommand("binary", "doubling construction, maximal contradictions");
    c_binary->add_option("--rows", rows, "Alice inputs")->required();
    c_binary->add_option("--cols", cols, "Bob inputs")->required();
    auto* c_rudin = construct->add_subcommand("rudin", "sum-property construction");
    c_rudin->add_option("--n", rn, "inputs per side")->required();
    c_rudin->add_option("--s", rs, "sum level")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "solve one game");
    analyze->require_subcommand(1);
    std::string cl_file = "-", cl_algorithm = "auto";
    auto* a_classical = analyze->add_subcommand("classical", "exact classical value");
    a_classical->add_option("file", cl_file, "game file or - for stdin");
    a_classical->add_option("--algorithm", cl_algorithm, "naive | path-gauge")
        ->check(CLI::IsMember({"auto", "naive", "path-gauge"}));
    std::string qb_file = "-", qb_norm = "sqrt";
    double qb_tol = 1e-12;
    auto* a_quantum = analyze->add_subcommand("quantum-bound", "spectral quantum upper bound");
    a_quantum->add_option("file", qb_file, "game file or - for stdin");
    a_quantum->add_option("--normalization", qb_norm, "sqrt | paper-literal")
        ->check(CLI::IsMember({"sqrt", "paper-literal"}));
    a_quantum->add_option("--tol", qb_tol, "absolute tolerance per operator norm");

    // certify
    std::string ce_file = "-";
    int ce_subset = 0;
    auto* certify = app.add_subcommand("certify", "maximality certificate");
    certify->add_option("file", ce_file, "game file or - for stdin");
    certify->add_option("--subset-sum", ce_subset, "also run the subset-sum certificate at this s");

    // girth-stats
    std::string gs_file = "-", gs_algorithm = "auto";
    auto* girth = app.add_subcommand("girth-stats", "H and H_opt graph statistics");
    girth->add_option("file", gs_file, "game file or - for stdin");
    girth->add_option("--algorithm", gs_algorithm, "solver for H_opt")
        ->check(CLI::IsMember({"auto", "naive", "path-gauge"}));

    // classify3x3
    std::string c3_file = "-";
    auto* classify = app.add_subcommand("classify3x3", "closed-form 3x3 contradiction number");
    classify->add_option("file", c3_file, "game file or - for stdin");

    // rudin-set
    int rset_s = 0;
    std::string rset_p;
    bool rset_verify = false;
    auto* rset = app.add_subcommand("rudin-set", "build and check a sum-property set");
    rset->add_option("--s", rset_s, "sum level")->required();
    rset->add_option("--p", rset_p, "prime size")->required();
    rset->add_flag("--verify", rset_verify, "also run the disjoint-subset check");

    // lower-bound
    int lb_n = 0;
    bool lb_exact = false;
    auto* lower = app.add_subcommand("lower-bound", "output-count lower bound via the permutation graph");
    lower->add_option("--n", lb_n, "matrix side")->required();
    lower->add_flag("--exact", lb_exact, "run the exact coloring search");

    // min-d
    int md_n = 0;
    std::string md_dmax;
    bool md_audit = false;
    auto* mind = app.add_subcommand("min-d", "least modulus with maximal contradictions");
    mind->add_option("--n", md_n, "matrix side")->required();
    mind->add_option("--d-max", md_dmax, "largest modulus to try")->required();
    mind->add_flag("--audit", md_audit, "sweep without symmetry reduction");

    // report
    std::string rp_file = "-", rp_norm = "sqrt", rp_algorithm = "auto";
    double rp_tol = 1e-12;
    int rp_subset = 2;
    auto* report = app.add_subcommand("report", "full pipeline on one game");
    report->add_option("file", rp_file, "game file or - for stdin");
    report->add_option("--normalization", rp_norm, "sqrt | paper-literal")
        ->check(CLI::IsMember({"sqrt", "paper-literal"}));
    report->add_option("--tol", rp_tol, "absolute tolerance per operator norm");
    report->add_option("--subset-sum", rp_subset, "subset-sum certificate level (0 disables)");
    report->add_option("--algorithm", rp_algorithm, "classical solver")
        ->check(CLI::IsMember({"auto", "naive", "path-gauge"}));

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("lingame");
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (c_binary->parsed()) {
            out << serialize_game(binary_game(rows, cols)) << "\n";
            return 0;
        }
        if (c_rudin->parsed()) {
            out << serialize_game(rudin_game(rn, rs)) << "\n";
            return 0;
        }
        if (a_classical->parsed()) {
            GameMatrix m = parse_game(read_input(cl_file, in));
            emit(out, classical_to_json(m, solve_with(m, cl_algorithm, g, err)));
            return 0;
        }
        if (a_quantum->parsed()) {
            GameMatrix m = parse_game(read_input(qb_file, in));
            SpectralBudget sb{g.spectral_cap, qb_tol, 200'000, g.workers};
            Normalization norm = qb_norm == "sqrt" ? Normalization::sqrt_inputs
                                                   : Normalization::paper_literal;
            emit(out, spectral_to_json(quantum_upper_bound(m, norm, sb), true));
            return 0;
        }
        if (certify->parsed()) {
            GameMatrix m = parse_game(read_input(ce_file, in));
            nlohmann::json j;
            j["maximality"] = certificate_to_json(certify_max_contradictions(m));
            if (ce_subset > 0)
                j["subset_sum"] =
                    subset_sum_to_json(subset_sum_certificate(m, ce_subset, g.subset_budget),
                                       ce_subset);
            emit(out, j);
            return 0;
        }
        if (girth->parsed()) {
            GameMatrix m = parse_game(read_input(gs_file, in));
            nlohmann::json j;
            j["h"] = graph_stats_to_json(graph_stats(build_h(m)));
            ClassicalResult r = solve_with(m, gs_algorithm, g, err);
            j["h_opt"] = graph_stats_to_json(graph_stats(build_h_opt(m, r)));
            j["h_opt_algorithm"] = r.algorithm == ClassicalAlgorithm::naive ? "naive" : "path-gauge";
            emit(out, j);
            return 0;
        }
        if (classify->parsed()) {
            GameMatrix m = parse_game(read_input(c3_file, in));
            if (m.rows() != 3 || m.cols() != 3) throw InputError("classify3x3 needs a 3x3 game");
            auto [gauged, moves] = standard_form(m);
            ClassifyResult res = classify_3x3(gauged);
            emit(out, nlohmann::json{{"beta", res.beta}, {"rule", res.rule}});
            return 0;
        }
        if (rset->parsed()) {
            RudinSet set = rudin_set(rset_s, parse_decimal(rset_p), g.subset_budget);
            nlohmann::json elements = nlohmann::json::array(),
                           order = nlohmann::json::array();
            for (const auto& x : set.elements) elements.push_back(x.str());
            for (const auto& x : set.by_index) order.push_back(x.str());
            nlohmann::json j{{"s", set.s},
                             {"p", set.p.str()},
                             {"elements", elements},
                             {"construction_order", order},
                             {"verified_level", set.verified_level}};
            j["multiset"] = subset_sum_to_json(
                verify_sum_property(set.elements, set.s, SumMode::multiset, std::nullopt,
                                    g.subset_budget),
                set.s);
            if (rset_verify)
                j["disjoint"] = subset_sum_to_json(
                    verify_sum_property(set.elements, set.s, SumMode::disjoint_subset, std::nullopt,
                                        g.subset_budget),
                    set.s);
            emit(out, j);
            return 0;
        }
        if (lower->parsed()) {
            PermGraph gn = build_gn(lb_n, g.gn_cap);
            ChromaticBounds b = chromatic_bounds(gn);
            Int floor = Int(lb_n - 1) * (lb_n - 1) + 1;
            Int best = floor;
            best = std::max(best, Int(b.clique_bound));
            best = std::max(best, Int(b.independence_bound));
            best = std::max(best, Int(b.hoffman_bound));
            nlohmann::json j{{"n", lb_n},
                             {"vertices", static_cast<std::int64_t>(gn.perms.size())},
                             {"degree", gn.graph.degree(0)},
                             {"clique_bound", b.clique_bound},
                             {"independence_number", b.independence_number},
                             {"independence_bound", b.independence_bound},
                             {"hoffman_bound", b.hoffman_bound},
                             {"algebraic_floor", floor.str()}};
            if (lb_exact) {
                int hint = std::max({b.clique_bound, b.independence_bound, b.hoffman_bound});
                ChromaticResult chi = exact_chromatic(gn, g.chi_budget, hint);
                j["chromatic"] = {{"lower", chi.lower}, {"upper", chi.upper}, {"exact", chi.exact}};
                best = std::max(best, Int(chi.exact ? chi.upper : chi.lower));
            }
            j["lower_bound"] = best.str();
            emit(out, j);
            return 0;
        }
        if (mind->parsed()) {
            MinDResult res =
                exhaustive_min_d(md_n, parse_decimal(md_dmax), g.min_d_budget, md_audit, g.workers);
            nlohmann::json ruled = nlohmann::json::array();
            for (const auto& d : res.ruled_out) ruled.push_back(d.str());
            nlohmann::json j{{"n", md_n},
                             {"d_max", md_dmax},
                             {"ruled_out", ruled},
                             {"candidates_tested", res.candidates_tested}};
            if (res.d_min) {
                j["d_min"] = res.d_min->str();
                j["witness"] = game_to_json(*res.witness);
                j["note"] = "every modulus in ruled_out is exhaustively refuted; d_min carries a "
                            "re-verified witness";
            } else {
                j["d_min"] = nullptr;
                j["note"] = "no modulus up to d_max admits the maximal contradiction number";
            }
            emit(out, j);
            return 0;
        }
        if (report->parsed()) {
            GameMatrix m = parse_game(read_input(rp_file, in));
            ReportOptions opt;
            opt.classical = g.classical();
            opt.spectral = SpectralBudget{g.spectral_cap, rp_tol, 200'000, g.workers};
            opt.normalization =
                rp_norm == "sqrt" ? Normalization::sqrt_inputs : Normalization::paper_literal;
            if (rp_algorithm == "naive") opt.algorithm = ClassicalAlgorithm::naive;
            if (rp_algorithm == "path-gauge") opt.algorithm = ClassicalAlgorithm::path_gauge;
            opt.subset_s = rp_subset;
            opt.subset_budget = g.subset_budget;
            emit(out, report_to_json(analyze_game(m, opt)));
            return 0;
        }
        err << "error: no command handled\n";
        return 1;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        err << "did not converge: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace lingame
