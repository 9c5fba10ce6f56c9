#include "lingame/cycles.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "lingame/errors.hpp"

namespace lingame {

namespace {

bool descend(int n_a, int n_b, int max_len, std::vector<int>& rows, std::vector<int>& cols,
             std::vector<char>& row_used, std::vector<char>& col_used,
             const std::function<bool(const Cycle&)>& visit) {
    for (int j = 0; j < n_b; ++j) {
        if (col_used[j]) continue;
        cols.push_back(j);
        col_used[j] = 1;
        if (cols.size() >= 2 && j > cols.front()) {
            if (!visit(Cycle{rows, cols})) {
                col_used[j] = 0;
                cols.pop_back();
                return false;
            }
        }
        if (2 * static_cast<int>(rows.size() + 1) <= max_len) {
            for (int v = rows.front() + 1; v < n_a; ++v) {
                if (row_used[v]) continue;
                rows.push_back(v);
                row_used[v] = 1;
                bool go = descend(n_a, n_b, max_len, rows, cols, row_used, col_used, visit);
                row_used[v] = 0;
                rows.pop_back();
                if (!go) {
                    col_used[j] = 0;
                    cols.pop_back();
                    return false;
                }
            }
        }
        col_used[j] = 0;
        cols.pop_back();
    }
    return true;
}

} // namespace

void enumerate_cycles(int n_a, int n_b, int max_len,
                      const std::function<bool(const Cycle&)>& visit) {
    if (max_len < 4) throw InputError("cycles have length at least 4");
    std::vector<int> rows, cols;
    std::vector<char> row_used(n_a, 0), col_used(n_b, 0);
    for (int i1 = 0; i1 < n_a; ++i1) {
        rows.assign(1, i1);
        row_used[i1] = 1;
        bool go = descend(n_a, n_b, max_len, rows, cols, row_used, col_used, visit);
        row_used[i1] = 0;
        if (!go) return;
    }
}

std::vector<Cycle> list_cycles(int n_a, int n_b, int max_len) {
    std::vector<Cycle> out;
    enumerate_cycles(n_a, n_b, max_len, [&](const Cycle& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool is_good_cycle(const GameMatrix& m, const Cycle& c) {
    const int l = c.length();
    if (l < 2 || c.cols.size() != c.rows.size())
        throw InputError("cycle needs equally many rows and columns, at least 2 each");
    auto check = [](const std::vector<int>& v, int bound) {
        std::vector<int> sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() < 0 || sorted.back() >= bound)
            throw std::out_of_range("cycle index out of range");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("cycle indices must be distinct");
    };
    check(c.rows, m.rows());
    check(c.cols, m.cols());

    const Int& d = m.modulus();
    Residue forward = 0, reverse = 0;
    for (int t = 0; t < l; ++t) {
        forward = mod_add(forward, m.at(c.rows[t], c.cols[t]), d);
        reverse = mod_add(reverse, m.at(c.rows[(t + 1) % l], c.cols[t]), d);
    }
    return forward == reverse;
}

MaximalityCertificate certify_max_contradictions(const GameMatrix& m) {
    MaximalityCertificate cert;
    const int max_len = 2 * std::min(m.rows(), m.cols());
    enumerate_cycles(m.rows(), m.cols(), max_len, [&](const Cycle& c) {
        ++cert.cycles_checked;
        if (is_good_cycle(m, c)) {
            cert.verdict = MaximalityCertificate::Verdict::good_cycle_found;
            cert.good_cycle = c;
            return false;
        }
        return true;
    });
    return cert;
}

namespace {

Int key_sum(const Int& sum, const std::optional<Int>& modulus) {
    return modulus ? mod_reduce(sum, *modulus) : sum;
}

SubsetSumVerdict::Counterexample reduce_pair(int t, const std::vector<int>& a,
                                             const std::vector<int>& b,
                                             const std::vector<Int>& values, bool positions_known) {
    // strip the common support; what remains is a disjoint pair of equal size
    std::vector<int> lhs, rhs;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(lhs));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(rhs));
    SubsetSumVerdict::Counterexample ce;
    ce.t = static_cast<int>(lhs.size());
    for (int p : lhs) ce.lhs.push_back(values[p]);
    for (int p : rhs) ce.rhs.push_back(values[p]);
    if (positions_known) {
        ce.lhs_positions = lhs;
        ce.rhs_positions = rhs;
    }
    (void)t;
    return ce;
}

/// Lexicographic scan of all size-t index subsets (multisets when repeats
/// are allowed), hashing sums; the first repeated sum gives the
/// counterexample. Distinct tuples with equal sums always reduce to a
/// disjoint pair, so this is equivalent to the pairwise disjoint check.
SubsetSumVerdict scan_sums(const std::vector<Int>& values, const std::optional<Int>& modulus,
                           int s, std::uint64_t budget, bool multiset, bool positions_known) {
    const int n = static_cast<int>(values.size());
    SubsetSumVerdict verdict;
    if (s < 1) throw InputError("subset size must be at least 1");

    for (int t = 1; t <= s && verdict.pass; ++t) {
        std::map<Int, std::vector<int>> seen;
        std::vector<int> pick;
        Int partial = 0;
        std::function<bool(int)> grow = [&](int from) -> bool {
            if (static_cast<int>(pick.size()) == t) {
                if (++verdict.subsets_enumerated > budget)
                    throw BudgetExceeded(
                        "subset-sum scan exceeded its cap after fully verifying sizes up to " +
                            std::to_string(t - 1),
                        verdict.subsets_enumerated);
                auto [it, inserted] = seen.try_emplace(key_sum(partial, modulus), pick);
                if (!inserted && it->second != pick) {
                    verdict.pass = false;
                    verdict.counterexample = reduce_pair(t, it->second, pick, values, positions_known);
                    return false;
                }
                return true;
            }
            for (int p = from; p < n; ++p) {
                pick.push_back(p);
                partial += values[p];
                bool go = grow(multiset ? p : p + 1);
                partial -= values[p];
                pick.pop_back();
                if (!go) return false;
            }
            return true;
        };
        grow(0);
        if (verdict.pass) verdict.checked_up_to = t;
    }
    return verdict;
}

} // namespace

SubsetSumVerdict subset_sum_certificate(const GameMatrix& m, int s, std::uint64_t budget,
                                        bool multiset) {
    if (s < 1 || s > std::min(m.rows(), m.cols()))
        throw InputError("subset size must lie in [1, min(n_a, n_b)]");
    return scan_sums(m.entries(), m.modulus(), s, budget, multiset, true);
}

SubsetSumVerdict subset_sum_certificate(const std::vector<Int>& values,
                                        const std::optional<Int>& modulus, int s,
                                        std::uint64_t budget, bool multiset) {
    return scan_sums(values, modulus, s, budget, multiset, false);
}

GameGraph build_h(const GameMatrix& m) {
    GameGraph g{m.rows(), m.cols(), {}};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) == 0) g.edges.emplace_back(i, j);
    return g;
}

GameGraph build_h_opt(const GameMatrix& m, const ClassicalResult& r) {
    std::int64_t expected = static_cast<std::int64_t>(m.rows()) * m.cols() - r.beta_c;
    if (ones_count_under(m, r.witness) != expected)
        throw ConsistencyError("stale witness: re-evaluation does not reproduce the optimum");
    return GameGraph{m.rows(), m.cols(), r.ones};
}

namespace {

std::vector<std::vector<int>> adjacency(const GameGraph& g) {
    std::vector<std::vector<int>> adj(g.n_a + g.n_b);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(g.n_a + j);
        adj[g.n_a + j].push_back(i);
    }
    return adj;
}

std::vector<int> component_ids(const std::vector<std::vector<int>>& adj, int& count) {
    std::vector<int> comp(adj.size(), -1);
    count = 0;
    for (std::size_t start = 0; start < adj.size(); ++start) {
        if (comp[start] != -1) continue;
        comp[start] = count;
        std::queue<int> q;
        q.push(static_cast<int>(start));
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (comp[v] == -1) {
                    comp[v] = count;
                    q.push(v);
                }
        }
        ++count;
    }
    return comp;
}

} // namespace

GraphStats graph_stats(const GameGraph& g) {
    GraphStats st;
    st.edge_count = static_cast<std::int64_t>(g.edges.size());
    auto adj = adjacency(g);
    const int nv = static_cast<int>(adj.size());
    st.components = 0;
    component_ids(adj, st.components);
    st.is_connected = st.components == 1;
    st.is_tree = st.is_connected && st.edge_count == nv - 1;

    // girth: min over BFS roots of the first non-tree edge's cycle estimate,
    // exact once every root has been tried
    int best = -1;
    std::vector<int> dist(nv), parent(nv);
    for (int root = 0; root < nv; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best != -1) st.girth = best;
    return st;
}

std::pair<GameMatrix, std::vector<EquivalenceMove>> connect_completion(const GameMatrix& m) {
    GameMatrix cur = m;
    std::vector<EquivalenceMove> moves;
    const int na = m.rows(), nb = m.cols();
    for (int round = 0; round < na + nb; ++round) {
        auto adj = adjacency(build_h(cur));
        int count = 0;
        std::vector<int> comp = component_ids(adj, count);
        if (count == 1) break;

        int i0 = -1, j0 = -1;
        for (int i = 0; i < na && i0 == -1; ++i)
            for (int j = 0; j < nb; ++j)
                if (comp[na + j] != comp[i]) {
                    i0 = i;
                    j0 = j;
                    break;
                }
        if (i0 == -1) throw ConsistencyError("disconnected graph with no cross pair");

        // multiply every row and column outside comp(i0) so that entry
        // (i0, j0) becomes a unit while all existing units cancel
        Residue zeta = cur.at(i0, j0);
        int home = comp[i0];
        for (int i = 0; i < na; ++i)
            if (comp[i] != home) {
                moves.push_back(RowMult{i, zeta});
                cur = apply_move(cur, moves.back());
            }
        for (int j = 0; j < nb; ++j)
            if (comp[na + j] != home) {
                moves.push_back(ColMult{j, mod_neg(zeta, cur.modulus())});
                cur = apply_move(cur, moves.back());
            }
    }
    return {std::move(cur), std::move(moves)};
}

} // namespace lingame
