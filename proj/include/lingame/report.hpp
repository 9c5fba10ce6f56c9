#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lingame/classical.hpp"
#include "lingame/constructions.hpp"
#include "lingame/cycles.hpp"
#include "lingame/game.hpp"
#include "lingame/spectral.hpp"

namespace lingame {

struct ReportOptions {
    ClassicalBudget classical;
    SpectralBudget spectral;
    Normalization normalization = Normalization::sqrt_inputs;
    std::optional<ClassicalAlgorithm> algorithm; // forced; otherwise chosen by budget
    int subset_s = 2;
    std::uint64_t subset_budget = 10'000'000;
};

/// Everything the full pipeline knows about one game, re-validated for
/// internal consistency before emission.
struct AnalysisReport {
    GameMatrix game;
    ClassicalResult classical;
    Rat p_cl;
    GraphStats h_opt_stats;
    MaximalityCertificate maximality;
    std::optional<SubsetSumVerdict> subset_sum;
    int subset_s = 0;
    std::optional<SpectralBound> quantum;
    std::optional<double> quantum_floor; // set when the power sum was refused
    std::optional<double> bias;
    std::map<std::string, double> timings_ms;
};

AnalysisReport analyze_game(const GameMatrix& m, const ReportOptions& opt = {});

nlohmann::json report_to_json(const AnalysisReport& r);

// shared JSON renderers used by the CLI commands
nlohmann::json game_to_json(const GameMatrix& m);
nlohmann::json classical_to_json(const GameMatrix& m, const ClassicalResult& r);
nlohmann::json certificate_to_json(const MaximalityCertificate& c);
nlohmann::json subset_sum_to_json(const SubsetSumVerdict& v, int s);
nlohmann::json graph_stats_to_json(const GraphStats& st);
nlohmann::json spectral_to_json(const SpectralBound& b, bool include_norms);

} // namespace lingame
