#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lingame/game.hpp"
#include "lingame/numeric.hpp"

namespace lingame {

/// Small dense undirected graph.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    void add_edge(int a, int b) { adj[a][b] = adj[b][a] = true; }
    int degree(int v) const;
    std::int64_t edge_count() const;
};

/// Graph on all n! permutations (lexicographic order); two permutations
/// are adjacent when their quotient is a single cycle. Its chromatic
/// number lower-bounds the outputs needed for maximal contradictions.
struct PermGraph {
    int n = 0;
    std::vector<std::vector<int>> perms;
    SimpleGraph graph;
};

struct ChromaticBounds {
    int clique_bound = 0;       // omega, exact
    int independence_bound = 0; // ceil(|V| / alpha)
    int hoffman_bound = 0;      // ceil(1 + lambda_1 / |lambda_n|)
    int clique_size = 0;
    int independence_number = 0;
    double lambda_min = 0.0;
};

struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<int> coloring; // proper coloring with `upper` colors
};

struct PermutationCertificate {
    bool pass = false;
    std::uint64_t pairs_checked = 0;
    // first single-cycle pair with equal row sums, when failing
    std::optional<std::pair<std::vector<int>, std::vector<int>>> violating_pair;
};

struct MinDResult {
    std::optional<Int> d_min;
    std::optional<GameMatrix> witness;
    std::vector<Int> ruled_out; // moduli exhaustively shown impossible
    std::uint64_t candidates_tested = 0;
};

PermGraph build_gn(int n, int cap = 5);

ChromaticBounds chromatic_bounds(const PermGraph& g);
ChromaticBounds chromatic_bounds(const SimpleGraph& g);

/// Exact chi by DSATUR-seeded branch and bound; when the node budget runs
/// out the result carries the verified interval with exact = false.
/// lower_hint feeds an externally proven lower bound (independence or
/// eigenvalue) into the search.
ChromaticResult exact_chromatic(const PermGraph& g, std::uint64_t budget = 2'000'000,
                                int lower_hint = 1);
ChromaticResult exact_chromatic(const SimpleGraph& g, std::uint64_t budget = 2'000'000,
                                int lower_hint = 1);

/// Largest of the chromatic lower bounds (exact chi when affordable) and
/// the algebraic floor (n-1)^2 + 1.
Int min_outputs_lower_bound(int n, int cap = 5, std::uint64_t chi_budget = 2'000'000);

/// For a square matrix: check that the diagonal-like sums differ mod d for
/// every permutation pair whose quotient is a single cycle. Passing forces
/// the maximal contradiction number (n-1)^2.
PermutationCertificate permutation_certificate(const GameMatrix& m, int cap = 6);

/// Sweep d = 2..d_max over all gauged matrices (free block canonicalized
/// under row/column permutations and transposition unless audit), testing
/// for the maximal contradiction number with the exact solver. Returns the
/// least feasible d with its first witness, plus every d ruled out.
MinDResult exhaustive_min_d(int n, const Int& d_max, std::uint64_t budget = 2'000'000'000,
                            bool audit = false, int workers = 1);

} // namespace lingame
