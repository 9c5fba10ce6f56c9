#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lingame/game.hpp"
#include "lingame/numeric.hpp"

namespace lingame {

/// A deterministic strategy in gauge form: entry (i,j) is satisfied when
/// k_ij + row_shifts[i] + col_shifts[j] = 0 mod d. row_shifts[0] is fixed
/// to 0 (a global shift moves freely between the two sides).
struct ShiftAssignment {
    std::vector<Residue> row_shifts;
    std::vector<Residue> col_shifts;
};

enum class ClassicalAlgorithm { naive, path_gauge };

/// Exact optimum with proof material: beta_c is the contradiction number,
/// witness attains it, ones is the witness's satisfied-entry set.
struct ClassicalResult {
    std::int64_t beta_c = 0;
    ShiftAssignment witness;
    std::vector<std::pair<int, int>> ones; // sorted row-major
    ClassicalAlgorithm algorithm = ClassicalAlgorithm::naive;
};

struct ClassicalBudget {
    std::uint64_t naive_ops = 1'000'000'000; // residue evaluations
    std::uint64_t path_steps = 5'000'000;    // DFS extensions during candidate search
    std::uint64_t path_evals = 2'000'000'000; // residue evaluations over the candidate product
    int workers = 1;
};

/// Number of entries (i,j) with k_ij + r_i + c_j = 0 mod d.
std::int64_t ones_count_under(const GameMatrix& m, const ShiftAssignment& s);

/// Exact beta_C by enumerating all d^(n_a-1) row-shift vectors (r_0 = 0);
/// for fixed rows the optimal c_j is a mode of {-(k_ij + r_i)}_i, chosen
/// smallest on ties. Witness is the lexicographically least optimal
/// (row_shifts, col_shifts). Throws BudgetExceeded if the sweep is too big.
ClassicalResult contradiction_number_naive(const GameMatrix& m, const ClassicalBudget& budget = {});

/// Exact beta_C for large d: every optimal assignment has a connected
/// satisfied-entry graph, so each optimal r_i equals minus an alternating
/// entry sum along some simple path row0 -> row_i of the complete bipartite
/// graph. Enumerates those candidate sets and exhausts their product with
/// the same column completion and tie-break as the naive solver; agrees
/// with it whenever both run.
ClassicalResult contradiction_number_path_gauge(const GameMatrix& m, const ClassicalBudget& budget = {});

/// p_Cl = 1 - beta_C / (n_a n_b), exactly.
Rat classical_value(const ClassicalResult& r, const GameMatrix& m);

} // namespace lingame
