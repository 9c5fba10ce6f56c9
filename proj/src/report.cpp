#include "lingame/report.hpp"

#include <chrono>

#include "lingame/errors.hpp"

namespace lingame {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ClassicalResult solve_classical(const GameMatrix& m, const ReportOptions& opt) {
    if (opt.algorithm) {
        return *opt.algorithm == ClassicalAlgorithm::naive
                   ? contradiction_number_naive(m, opt.classical)
                   : contradiction_number_path_gauge(m, opt.classical);
    }
    Int naive_cost = 1;
    for (int i = 1; i < m.rows(); ++i) naive_cost *= m.modulus();
    naive_cost *= m.rows() * m.cols();
    if (naive_cost <= opt.classical.naive_ops) return contradiction_number_naive(m, opt.classical);
    return contradiction_number_path_gauge(m, opt.classical);
}

} // namespace

AnalysisReport analyze_game(const GameMatrix& m, const ReportOptions& opt) {
    auto t0 = Clock::now();
    AnalysisReport rep{.game = m,
                       .classical = {},
                       .p_cl = 0,
                       .h_opt_stats = {},
                       .maximality = {},
                       .subset_sum = std::nullopt,
                       .subset_s = opt.subset_s,
                       .quantum = std::nullopt,
                       .quantum_floor = std::nullopt,
                       .bias = std::nullopt,
                       .timings_ms = {}};

    rep.classical = solve_classical(m, opt);
    rep.p_cl = classical_value(rep.classical, m);
    rep.timings_ms["classical"] = ms_since(t0);

    // independent re-validation before anything is emitted
    std::int64_t cells = static_cast<std::int64_t>(m.rows()) * m.cols();
    if (ones_count_under(m, rep.classical.witness) != cells - rep.classical.beta_c)
        throw ConsistencyError("witness does not reproduce the reported contradiction number");
    if (rep.p_cl != Rat(1) - Rat(rep.classical.beta_c, cells))
        throw ConsistencyError("classical value does not match the contradiction number");

    auto t1 = Clock::now();
    rep.maximality = certify_max_contradictions(m);
    std::int64_t beta_max = static_cast<std::int64_t>(m.rows() - 1) * (m.cols() - 1);
    bool cert_maximal = rep.maximality.verdict == MaximalityCertificate::Verdict::maximal;
    if (cert_maximal != (rep.classical.beta_c == beta_max))
        throw ConsistencyError("cycle certificate disagrees with the exact solver");

    rep.h_opt_stats = graph_stats(build_h_opt(m, rep.classical));
    if (opt.subset_s >= 1 && opt.subset_s <= std::min(m.rows(), m.cols()))
        rep.subset_sum = subset_sum_certificate(m, opt.subset_s, opt.subset_budget);
    rep.timings_ms["certificates"] = ms_since(t1);

    auto t2 = Clock::now();
    try {
        SpectralBudget sb = opt.spectral;
        sb.workers = opt.classical.workers;
        rep.quantum = quantum_upper_bound(m, opt.normalization, sb);
        Rat p_rand(1, m.modulus());
        if (rep.p_cl > p_rand) rep.bias = bias_ratio(rep.quantum->p_q_bar, rep.p_cl, m.modulus());
    } catch (const BudgetExceeded&) {
        rep.quantum_floor = quantum_bound_floor(m);
    }
    rep.timings_ms["spectral"] = ms_since(t2);
    rep.timings_ms["total"] = ms_since(t0);
    return rep;
}

nlohmann::json game_to_json(const GameMatrix& m) {
    return nlohmann::json::parse(serialize_game(m));
}

namespace {

nlohmann::json rat_to_json(const Rat& r) {
    return {{"fraction", rat_to_fraction_string(r)}, {"decimal", rat_to_decimal_string(r)}};
}

nlohmann::json shifts_to_json(const ShiftAssignment& s) {
    nlohmann::json rows = nlohmann::json::array(), cols = nlohmann::json::array();
    for (const auto& v : s.row_shifts) rows.push_back(v.str());
    for (const auto& v : s.col_shifts) cols.push_back(v.str());
    return {{"row_shifts", rows}, {"col_shifts", cols}};
}

} // namespace

nlohmann::json classical_to_json(const GameMatrix& m, const ClassicalResult& r) {
    nlohmann::json ones = nlohmann::json::array();
    for (auto [i, j] : r.ones) ones.push_back({i, j});
    return {{"beta_c", r.beta_c},
            {"p_cl", rat_to_json(classical_value(r, m))},
            {"algorithm", r.algorithm == ClassicalAlgorithm::naive ? "naive" : "path-gauge"},
            {"witness", shifts_to_json(r.witness)},
            {"ones", ones}};
}

nlohmann::json certificate_to_json(const MaximalityCertificate& c) {
    nlohmann::json j{{"verdict", c.verdict == MaximalityCertificate::Verdict::maximal
                                     ? "maximal"
                                     : "good-cycle-found"},
                     {"cycles_checked", c.cycles_checked}};
    if (c.good_cycle) j["good_cycle"] = {{"rows", c.good_cycle->rows}, {"cols", c.good_cycle->cols}};
    return j;
}

nlohmann::json subset_sum_to_json(const SubsetSumVerdict& v, int s) {
    nlohmann::json j{{"pass", v.pass},
                     {"s", s},
                     {"checked_up_to", v.checked_up_to},
                     {"subsets_enumerated", v.subsets_enumerated}};
    if (v.counterexample) {
        nlohmann::json lhs = nlohmann::json::array(), rhs = nlohmann::json::array();
        for (const auto& x : v.counterexample->lhs) lhs.push_back(x.str());
        for (const auto& x : v.counterexample->rhs) rhs.push_back(x.str());
        j["counterexample"] = {{"t", v.counterexample->t},
                               {"lhs", lhs},
                               {"rhs", rhs},
                               {"lhs_positions", v.counterexample->lhs_positions},
                               {"rhs_positions", v.counterexample->rhs_positions}};
    }
    return j;
}

nlohmann::json graph_stats_to_json(const GraphStats& st) {
    nlohmann::json j{{"edges", st.edge_count},
                     {"is_tree", st.is_tree},
                     {"is_connected", st.is_connected},
                     {"components", st.components}};
    if (st.girth)
        j["girth"] = *st.girth;
    else
        j["girth"] = nullptr;
    return j;
}

nlohmann::json spectral_to_json(const SpectralBound& b, bool include_norms) {
    nlohmann::json j{{"p_q_bar", b.p_q_bar},
                     {"normalization",
                      b.normalization == Normalization::sqrt_inputs ? "sqrt" : "paper-literal"},
                     {"tolerance", b.tolerance},
                     {"error_bound", b.error_bound}};
    if (include_norms) j["norms"] = b.per_power_norms;
    return j;
}

nlohmann::json report_to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["game"] = game_to_json(r.game);
    j["classical"] = classical_to_json(r.game, r.classical);
    j["p_rand"] = rat_to_json(Rat(1, r.game.modulus()));
    j["certificates"]["maximality"] = certificate_to_json(r.maximality);
    if (r.subset_sum)
        j["certificates"]["subset_sum"] = subset_sum_to_json(*r.subset_sum, r.subset_s);
    j["h_opt_stats"] = graph_stats_to_json(r.h_opt_stats);
    if (r.quantum) j["quantum"] = spectral_to_json(*r.quantum, true);
    if (r.quantum_floor) j["quantum_floor"] = *r.quantum_floor;
    if (r.bias) j["bias_ratio"] = *r.bias;
    j["timings_ms"] = r.timings_ms;
    return j;
}

} // namespace lingame
