#include "lingame/lowerbound.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "lingame/classical.hpp"
#include "lingame/errors.hpp"
#include "lingame/parallel.hpp"

namespace lingame {

int SimpleGraph::degree(int v) const {
    return static_cast<int>(std::count(adj[v].begin(), adj[v].end(), true));
}

std::int64_t SimpleGraph::edge_count() const {
    std::int64_t twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

namespace {

bool is_single_cycle(const std::vector<int>& p) {
    int first_moved = -1, moved = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) {
            if (first_moved == -1) first_moved = i;
            ++moved;
        }
    if (moved < 2) return false;
    int cur = p[first_moved], len = 1;
    while (cur != first_moved) {
        cur = p[cur];
        ++len;
    }
    return len == moved;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace

PermGraph build_gn(int n, int cap) {
    if (n < 2) throw InputError("permutation graph needs n >= 2");
    if (n > cap)
        throw InputError("n = " + std::to_string(n) + " exceeds the configured cap " +
                         std::to_string(cap));
    PermGraph g;
    g.n = n;
    g.perms = all_permutations(n);
    const int nv = static_cast<int>(g.perms.size());
    g.graph.n = nv;
    g.graph.adj.assign(nv, std::vector<bool>(nv, false));

    std::vector<int> inv(n), comp(n);
    for (int b = 0; b < nv; ++b) {
        for (int i = 0; i < n; ++i) inv[g.perms[b][i]] = i;
        for (int a = b + 1; a < nv; ++a) {
            for (int i = 0; i < n; ++i) comp[i] = g.perms[a][inv[i]];
            if (is_single_cycle(comp)) g.graph.add_edge(a, b);
        }
    }
    return g;
}

namespace {

/// Maximum clique, greedy-coloring-bounded branch and bound. When the node
/// budget runs out `complete` drops and `best` is still a valid clique,
/// usable as a lower bound.
struct CliqueSolver {
    const SimpleGraph& g;
    std::vector<int> best;
    std::uint64_t nodes = 0, budget;
    bool complete = true;

    CliqueSolver(const SimpleGraph& g, std::uint64_t budget) : g(g), budget(budget) {}

    void expand(std::vector<int>& R, std::vector<int>& P) {
        if (nodes++ > budget) {
            complete = false;
            return;
        }
        if (P.empty()) {
            if (R.size() > best.size()) best = R;
            return;
        }
        // greedy colour classes over P; class index+1 bounds the clique
        // extension achievable inside P
        std::vector<int> color(P.size());
        std::vector<std::vector<int>> classes;
        for (std::size_t t = 0; t < P.size(); ++t) {
            int v = P[t];
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g.adj[u][v]) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            color[t] = static_cast<int>(c) + 1;
        }
        std::vector<std::pair<int, int>> order; // (color, vertex)
        for (std::size_t t = 0; t < P.size(); ++t) order.emplace_back(color[t], P[t]);
        std::sort(order.begin(), order.end());

        for (std::size_t t = order.size(); t-- > 0;) {
            auto [c, v] = order[t];
            if (R.size() + c <= best.size()) return;
            R.push_back(v);
            std::vector<int> next;
            for (std::size_t u = 0; u < t; ++u)
                if (g.adj[order[u].second][v]) next.push_back(order[u].second);
            expand(R, next);
            R.pop_back();
        }
    }

    std::vector<int> solve() {
        std::vector<int> R, P(g.n);
        std::iota(P.begin(), P.end(), 0);
        expand(R, P);
        return best;
    }
};

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph c;
    c.n = g.n;
    c.adj.assign(g.n, std::vector<bool>(g.n, false));
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (a != b) c.adj[a][b] = !g.adj[a][b];
    return c;
}

} // namespace

ChromaticBounds chromatic_bounds(const SimpleGraph& g) {
    ChromaticBounds out;
    CliqueSolver cliques(g, 500'000'000);
    out.clique_size = static_cast<int>(cliques.solve().size());
    if (!cliques.complete) throw BudgetExceeded("clique search exceeded its node budget", 0);
    out.clique_bound = out.clique_size;
    SimpleGraph comp = complement(g);
    CliqueSolver independents(comp, 500'000'000);
    out.independence_number = static_cast<int>(independents.solve().size());
    if (!independents.complete)
        throw BudgetExceeded("independent-set search exceeded its node budget", 0);
    out.independence_bound =
        static_cast<int>((g.n + out.independence_number - 1) / out.independence_number);

    if (g.edge_count() == 0) {
        out.hoffman_bound = 1;
        out.lambda_min = 0.0;
        return out;
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.adj[i][j]) a(i, j) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    out.lambda_min = es.eigenvalues()(0);
    bool regular = true;
    int deg0 = g.degree(0);
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != deg0) regular = false;
    double lambda1 = regular ? static_cast<double>(deg0) : es.eigenvalues()(g.n - 1);
    out.hoffman_bound = static_cast<int>(std::ceil(1.0 + lambda1 / std::abs(out.lambda_min) - 1e-9));
    return out;
}

ChromaticBounds chromatic_bounds(const PermGraph& g) { return chromatic_bounds(g.graph); }

namespace {

/// DSATUR greedy coloring: number of colors used and the assignment.
std::pair<int, std::vector<int>> dsatur_greedy(const SimpleGraph& g) {
    std::vector<int> color(g.n, -1);
    std::vector<std::vector<bool>> sat(g.n); // colors seen among neighbors
    for (int v = 0; v < g.n; ++v) sat[v].assign(g.n + 1, false);
    std::vector<int> satc(g.n, 0);
    int used = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] != -1) continue;
            if (pick == -1 || satc[v] > satc[pick] ||
                (satc[v] == satc[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        int c = 0;
        while (sat[pick][c]) ++c;
        color[pick] = c;
        used = std::max(used, c + 1);
        for (int u = 0; u < g.n; ++u)
            if (g.adj[pick][u] && !sat[u][c]) {
                sat[u][c] = true;
                ++satc[u];
            }
    }
    return {used, color};
}

enum class ColorOutcome { yes, no, budget };

/// k-colorability by saturation-driven backtracking; saturation counters
/// are maintained incrementally so a node costs O(n + degree).
struct ColorSolver {
    const SimpleGraph& g;
    int k;
    std::uint64_t nodes = 0, budget;
    std::vector<int> color;
    std::vector<int> degree;
    std::vector<std::vector<int>> neighbors;
    std::vector<std::vector<int>> seen_count; // colored neighbors per color
    std::vector<int> saturation;              // distinct colors among colored neighbors

    ColorSolver(const SimpleGraph& g, int k, std::uint64_t budget)
        : g(g), k(k), budget(budget), color(g.n, -1), degree(g.n, 0), neighbors(g.n),
          seen_count(g.n, std::vector<int>(k, 0)), saturation(g.n, 0) {
        for (int v = 0; v < g.n; ++v) {
            for (int u = 0; u < g.n; ++u)
                if (g.adj[v][u]) neighbors[v].push_back(u);
            degree[v] = static_cast<int>(neighbors[v].size());
        }
    }

    void assign(int v, int c) {
        color[v] = c;
        for (int u : neighbors[v])
            if (seen_count[u][c]++ == 0) ++saturation[u];
    }

    void unassign(int v) {
        int c = color[v];
        color[v] = -1;
        for (int u : neighbors[v])
            if (--seen_count[u][c] == 0) --saturation[u];
    }

    ColorOutcome run(int assigned, int max_used) {
        if (nodes++ > budget) return ColorOutcome::budget;
        if (assigned == g.n) return ColorOutcome::yes;
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] != -1) continue;
            if (saturation[v] >= k) return ColorOutcome::no; // dead vertex
            if (pick == -1 || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && degree[v] > degree[pick]))
                pick = v;
        }
        int limit = std::min(k - 1, max_used + 1); // first use of a new color is canonical
        for (int c = 0; c <= limit; ++c) {
            if (seen_count[pick][c] != 0) continue;
            assign(pick, c);
            ColorOutcome sub = run(assigned + 1, std::max(max_used, c));
            if (sub != ColorOutcome::no) return sub; // keep the assignment on success
            unassign(pick);
        }
        return ColorOutcome::no;
    }
};

} // namespace

ChromaticResult exact_chromatic(const SimpleGraph& g, std::uint64_t budget, int lower_hint) {
    ChromaticResult res;
    auto [greedy_k, greedy_coloring] = dsatur_greedy(g);
    res.upper = greedy_k;
    res.coloring = greedy_coloring;
    // any clique found is a sound lower bound, complete search or not
    CliqueSolver cliques(g, budget);
    res.lower = std::max({1, lower_hint, static_cast<int>(cliques.solve().size())});

    while (res.upper > res.lower) {
        ColorSolver solver(g, res.upper - 1, budget);
        ColorOutcome out = solver.run(0, -1);
        if (out == ColorOutcome::budget) {
            res.exact = false;
            return res;
        }
        if (out == ColorOutcome::no) {
            res.lower = res.upper;
            break;
        }
        res.upper -= 1;
        res.coloring = solver.color;
    }
    res.exact = res.lower == res.upper;
    return res;
}

ChromaticResult exact_chromatic(const PermGraph& g, std::uint64_t budget, int lower_hint) {
    return exact_chromatic(g.graph, budget, lower_hint);
}

Int min_outputs_lower_bound(int n, int cap, std::uint64_t chi_budget) {
    Int floor = Int(n - 1) * (n - 1) + 1;
    PermGraph g = build_gn(n, cap);
    ChromaticBounds b = chromatic_bounds(g);
    Int best = floor;
    best = std::max(best, Int(b.clique_bound));
    best = std::max(best, Int(b.independence_bound));
    best = std::max(best, Int(b.hoffman_bound));
    int hint = std::max({b.clique_bound, b.independence_bound, b.hoffman_bound});
    ChromaticResult chi = exact_chromatic(g, chi_budget, hint);
    best = std::max(best, Int(chi.exact ? chi.upper : chi.lower));
    return best;
}

PermutationCertificate permutation_certificate(const GameMatrix& m, int cap) {
    if (m.rows() != m.cols()) throw InputError("permutation certificate needs a square matrix");
    const int n = m.rows();
    if (n > cap)
        throw InputError("n = " + std::to_string(n) + " exceeds the configured cap " +
                         std::to_string(cap));
    const Int& d = m.modulus();
    auto perms = all_permutations(n);
    const int nv = static_cast<int>(perms.size());
    std::vector<Residue> sums(nv);
    for (int a = 0; a < nv; ++a) {
        Residue s = 0;
        for (int j = 0; j < n; ++j) s = mod_add(s, m.at(j, perms[a][j]), d);
        sums[a] = s;
    }
    PermutationCertificate cert;
    std::vector<int> inv(n), comp(n);
    for (int b = 0; b < nv; ++b) {
        for (int i = 0; i < n; ++i) inv[perms[b][i]] = i;
        for (int a = b + 1; a < nv; ++a) {
            for (int i = 0; i < n; ++i) comp[i] = perms[a][inv[i]];
            if (!is_single_cycle(comp)) continue;
            ++cert.pairs_checked;
            if (sums[a] == sums[b]) {
                cert.pass = false;
                cert.violating_pair = {perms[b], perms[a]};
                return cert;
            }
        }
    }
    cert.pass = true;
    return cert;
}

namespace {

/// Lexicographically least image of the free block under row/column
/// permutations and transposition; a candidate is canonical when it equals
/// its own least image.
bool is_canonical_block(const std::vector<std::uint64_t>& block, int side,
                        const std::vector<std::vector<int>>& perms) {
    auto at = [&](const std::vector<std::uint64_t>& b, int i, int j) { return b[i * side + j]; };
    for (const auto& pr : perms) {
        for (const auto& pc : perms) {
            for (int transpose = 0; transpose < 2; ++transpose) {
                // compare image lexicographically against block
                bool smaller = false, equal = true;
                for (int i = 0; i < side && equal; ++i) {
                    for (int j = 0; j < side; ++j) {
                        std::uint64_t v = transpose ? at(block, pr[j], pc[i]) : at(block, pr[i], pc[j]);
                        std::uint64_t w = at(block, i, j);
                        if (v != w) {
                            smaller = v < w;
                            equal = false;
                            break;
                        }
                    }
                }
                if (!equal && smaller) return false;
            }
        }
    }
    return true;
}

GameMatrix block_to_matrix(const std::vector<std::uint64_t>& block, int n, const Int& d) {
    std::vector<Int> k(static_cast<std::size_t>(n) * n, Int(0));
    const int side = n - 1;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            k[static_cast<std::size_t>(i + 1) * n + (j + 1)] = Int(block[i * side + j]);
    return GameMatrix(n, n, d, std::move(k));
}

} // namespace

MinDResult exhaustive_min_d(int n, const Int& d_max, std::uint64_t budget, bool audit, int workers) {
    if (n < 2) throw InputError("need n >= 2");
    if (d_max < 2) throw InputError("need d_max >= 2");
    const int side = n - 1;
    const int cells = side * side;
    const std::int64_t target_beta = static_cast<std::int64_t>(side) * side;
    auto perms = all_permutations(side);

    MinDResult result;
    std::uint64_t consumed = 0;
    std::atomic<std::uint64_t> tested{0};

    for (Int d = 2; d <= d_max; ++d) {
        Int count_big = 1;
        for (int c = 0; c < cells; ++c) count_big *= d;
        Int cost_big = 1;
        for (int i = 1; i < n; ++i) cost_big *= d;
        cost_big *= n * n;
        if (count_big > std::numeric_limits<std::int64_t>::max())
            throw BudgetExceeded("candidate space for d = " + d.str() + " cannot be enumerated",
                                 consumed);
        const std::uint64_t count = count_big.convert_to<std::uint64_t>();
        const std::uint64_t dd = d.convert_to<std::uint64_t>();

        // refuse the whole d block up front so the budget decision does not
        // depend on scheduling
        Int block_cost = count_big * cost_big;
        if (Int(consumed) + block_cost > budget)
            throw BudgetExceeded("min-d sweep budget exhausted before d = " + d.str() +
                                     "; exhaustively ruled out " +
                                     std::to_string(result.ruled_out.size()) + " moduli so far",
                                 consumed);
        consumed += block_cost.convert_to<std::uint64_t>();

        std::atomic<std::uint64_t> first_hit{std::numeric_limits<std::uint64_t>::max()};
        ClassicalBudget solver_budget;
        solver_budget.naive_ops = std::numeric_limits<std::uint64_t>::max();

        for_each_chunk(count, workers, [&](int, std::uint64_t lo, std::uint64_t hi) {
            std::vector<std::uint64_t> block(cells);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                if (idx >= first_hit.load(std::memory_order_relaxed)) return;
                std::uint64_t rem = idx;
                for (int c = cells; c-- > 0;) {
                    block[c] = rem % dd;
                    rem /= dd;
                }
                if (!audit && !is_canonical_block(block, side, perms)) continue;
                tested.fetch_add(1);
                ClassicalResult r = contradiction_number_naive(block_to_matrix(block, n, d),
                                                               solver_budget);
                if (r.beta_c == target_beta) {
                    std::uint64_t prev = first_hit.load();
                    while (idx < prev && !first_hit.compare_exchange_weak(prev, idx)) {
                    }
                    return;
                }
            }
        });

        std::uint64_t hit = first_hit.load();
        if (hit != std::numeric_limits<std::uint64_t>::max()) {
            std::vector<std::uint64_t> block(cells);
            std::uint64_t rem = hit;
            for (int c = cells; c-- > 0;) {
                block[c] = rem % dd;
                rem /= dd;
            }
            GameMatrix witness = block_to_matrix(block, n, d);
            ClassicalResult check = contradiction_number_naive(witness, solver_budget);
            if (check.beta_c != target_beta)
                throw ConsistencyError("min-d witness failed re-verification");
            result.d_min = d;
            result.witness = witness;
            result.candidates_tested = tested.load();
            return result;
        }
        result.ruled_out.push_back(d);
    }
    result.candidates_tested = tested.load();
    return result;
}

} // namespace lingame
