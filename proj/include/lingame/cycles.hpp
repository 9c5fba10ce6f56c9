#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lingame/classical.hpp"
#include "lingame/game.hpp"

namespace lingame {

/// A cycle of K_{n_a,n_b} written as ordered distinct rows (i_1..i_l) and
/// columns (j_1..j_l), l >= 2, visiting the matrix entries
/// (i_1,j_1),(i_2,j_1),(i_2,j_2),...,(i_l,j_l),(i_1,j_l).
/// Canonical form: rows[0] is the least row on the cycle and cols[0] is the
/// smaller of its two neighbouring columns (cols[0] < cols[l-1]).
struct Cycle {
    std::vector<int> rows;
    std::vector<int> cols;
    int length() const { return static_cast<int>(rows.size()); }
    bool operator==(const Cycle&) const = default;
};

/// Bipartite graph on the game's inputs; edges live in rows x columns.
struct GameGraph {
    int n_a = 0;
    int n_b = 0;
    std::vector<std::pair<int, int>> edges; // sorted row-major
};

struct GraphStats {
    std::int64_t edge_count = 0;
    std::optional<int> girth; // empty means acyclic
    bool is_connected = false;
    bool is_tree = false;
    int components = 0;
};

struct MaximalityCertificate {
    enum class Verdict { maximal, good_cycle_found };
    Verdict verdict = Verdict::maximal;
    std::optional<Cycle> good_cycle;
    std::uint64_t cycles_checked = 0;
};

/// Outcome of the disjoint-subset-sum scan.
struct SubsetSumVerdict {
    bool pass = true;
    int checked_up_to = 0; // highest subset size fully verified
    // first colliding pair found, already reduced to disjoint supports
    struct Counterexample {
        int t = 0;
        std::vector<Residue> lhs;
        std::vector<Residue> rhs;
        std::vector<int> lhs_positions; // flat row-major entry indices; empty in multiset mode
        std::vector<int> rhs_positions;
    };
    std::optional<Counterexample> counterexample;
    std::uint64_t subsets_enumerated = 0;
};

/// Visit every cycle of K_{n_a,n_b} with length 4..max_len exactly once, in
/// a fixed canonical DFS order. Return false from the visitor to stop.
void enumerate_cycles(int n_a, int n_b, int max_len,
                      const std::function<bool(const Cycle&)>& visit);

std::vector<Cycle> list_cycles(int n_a, int n_b, int max_len);

/// True iff the forward entry sum equals the reverse entry sum mod d, i.e.
/// sum_t k[i_t][j_t] = sum_t k[i_{t+1}][j_t] (indices cyclic).
bool is_good_cycle(const GameMatrix& m, const Cycle& c);

/// Scan all cycles up to length 2*min(n_a, n_b). No good cycle means the
/// contradiction number is maximal, (n_a-1)(n_b-1); otherwise the first
/// good cycle in enumeration order is returned as the refutation.
MaximalityCertificate certify_max_contradictions(const GameMatrix& m);

/// Check that any two disjoint equal-size subsets of matrix entries, up to
/// size s, have distinct sums mod d. Success forces girth(H_opt) > 2s.
/// With multiset=true elements may repeat inside a sum (the stricter
/// self-test used for sum-property sets).
SubsetSumVerdict subset_sum_certificate(const GameMatrix& m, int s,
                                        std::uint64_t budget = 10'000'000, bool multiset = false);

/// Same scan over a plain value list (one value per position). Without a
/// modulus, sums are compared as integers.
SubsetSumVerdict subset_sum_certificate(const std::vector<Int>& values,
                                        const std::optional<Int>& modulus, int s,
                                        std::uint64_t budget = 10'000'000, bool multiset = false);

/// H(M): edges at entries equal to 0 mod d.
GameGraph build_h(const GameMatrix& m);

/// H_opt(M): edges at the satisfied entries of an exact optimum. The
/// witness is re-validated before use.
GameGraph build_h_opt(const GameMatrix& m, const ClassicalResult& r);

GraphStats graph_stats(const GameGraph& g);

/// Repeatedly apply the component-merging multiplier pattern until H is
/// connected; existing unit entries are preserved, so H(result) contains
/// H(m). Returns the new matrix and the moves applied.
std::pair<GameMatrix, std::vector<EquivalenceMove>> connect_completion(const GameMatrix& m);

} // namespace lingame
