#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lingame/cycles.hpp"
#include "lingame/game.hpp"

namespace lingame {

/// A sum-property set: p integers whose t-fold sums (t <= s, repetition
/// allowed) are pairwise distinct. `elements` is sorted ascending;
/// `by_index` keeps construction order x_0..x_{p-1}, which the game
/// construction consumes row-major.
struct RudinSet {
    int s = 0;
    Int p = 0;
    std::vector<Int> elements;
    std::vector<Int> by_index;
    int verified_level = 0;
};

enum class SumMode { multiset, disjoint_subset };

struct GirthEdgeBounds {
    Int m_max_exact = 0;   // largest edge count the degree-sum inequality allows
    Int m_max_simple = 0;  // floor(n + n^(1+1/s))
    Rat pcl_bound = 0;     // min(1, 2 n^(-1+1/s)) as an exact-rational enclosure
    double pcl_bound_value = 0.0;
};

/// Gauged matrix whose free block holds 2^1, 2^2, ... row-major with
/// d = 2^((n_a-1)(n_b-1)+1); no two disjoint entry subsets share a sum, so
/// the contradiction number is maximal.
GameMatrix binary_game(int n_a, int n_b, int max_bits = 1 << 20);

/// The s-sum set of size p (p prime, 2 <= s < p): x_k has base-(sp) digits
/// k^1, k^2, ..., k^s reduced mod p. Self-verifies the multiset sum
/// property up to s before returning.
RudinSet rudin_set(int s, const Int& p, std::uint64_t budget = 50'000'000);

/// Exhaustive sum-uniqueness check for t <= s. Multiset mode allows
/// repeated elements inside one sum; disjoint-subset mode compares
/// disjoint index subsets. Sums compared mod `modulus` when given.
SubsetSumVerdict verify_sum_property(const std::vector<Int>& elements, int s, SumMode mode,
                                     const std::optional<Int>& modulus = std::nullopt,
                                     std::uint64_t budget = 50'000'000);

/// Smallest prime q with lo < q <= hi; hi >= 2*lo guarantees existence.
Int prime_in_window(const Int& lo, const Int& hi);

/// n x n matrix with entries drawn row-major from the s-sum set built on
/// the smallest prime in (n^2, 2n^2], with d = (s p)^s; classical value
/// at most 2 n^(-1+1/s), and exactly (2n-1)/n^2 when s = n.
GameMatrix rudin_game(int n, int s);

/// Extremal edge-count bounds for an n+n vertex bipartite graph of girth
/// above 2s, and the classical-value bound they imply.
GirthEdgeBounds girth_edge_bounds(int n, int s);

} // namespace lingame
