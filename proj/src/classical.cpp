#include "lingame/classical.hpp"

#include <algorithm>
#include <optional>

#include "lingame/errors.hpp"
#include "lingame/parallel.hpp"

namespace lingame {

namespace {

/// Per-row search domain for the shift value: the whole of [0, d) for the
/// naive sweep, an explicit sorted candidate list for the path gauge.
/// Position order is ascending, so lex order over positions is lex order
/// over shift tuples.
struct ShiftDomain {
    std::vector<Residue> list; // used when !full
    Int d;                     // used when full
    bool full = false;

    std::uint64_t size() const {
        return full ? d.convert_to<std::uint64_t>() : static_cast<std::uint64_t>(list.size());
    }
    Residue at(std::uint64_t i) const { return full ? Residue(i) : list[i]; }
};

struct Candidate {
    std::int64_t ones = -1;
    std::vector<Residue> rows;
    std::vector<Residue> cols;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.ones != b.ones) return a.ones > b.ones;
    if (a.rows != b.rows) return a.rows < b.rows;
    return a.cols < b.cols;
}

/// Given fixed row shifts, complete each column with the smallest value of
/// maximal multiplicity among {-(k_ij + r_i)}_i and return the ones total.
std::int64_t complete_columns(const GameMatrix& m, const std::vector<Residue>& rows,
                              std::vector<Residue>& cols_out, std::vector<Residue>& scratch) {
    const Int& d = m.modulus();
    const int na = m.rows(), nb = m.cols();
    std::int64_t total = 0;
    cols_out.clear();
    for (int j = 0; j < nb; ++j) {
        scratch.clear();
        for (int i = 0; i < na; ++i)
            scratch.push_back(mod_neg(mod_add(m.at(i, j), rows[i], d), d));
        std::sort(scratch.begin(), scratch.end());
        int best_run = 0;
        std::size_t best_at = 0;
        int run = 1;
        for (std::size_t t = 1; t <= scratch.size(); ++t) {
            if (t < scratch.size() && scratch[t] == scratch[t - 1]) {
                ++run;
            } else {
                if (run > best_run) {
                    best_run = run;
                    best_at = t - 1;
                }
                run = 1;
            }
        }
        total += best_run;
        cols_out.push_back(scratch[best_at]);
    }
    return total;
}

std::vector<std::pair<int, int>> collect_ones(const GameMatrix& m, const ShiftAssignment& s) {
    const Int& d = m.modulus();
    std::vector<std::pair<int, int>> ones;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (mod_add(mod_add(m.at(i, j), s.row_shifts[i], d), s.col_shifts[j], d) == 0)
                ones.emplace_back(i, j);
    return ones;
}

ClassicalResult finish(const GameMatrix& m, Candidate best, ClassicalAlgorithm algo) {
    ClassicalResult res;
    res.beta_c = static_cast<std::int64_t>(m.rows()) * m.cols() - best.ones;
    res.witness = ShiftAssignment{std::move(best.rows), std::move(best.cols)};
    res.ones = collect_ones(m, res.witness);
    res.algorithm = algo;
    if (static_cast<std::int64_t>(res.ones.size()) != best.ones)
        throw ConsistencyError("witness re-evaluation does not reproduce the optimum");
    return res;
}

/// Enumerate the lex range [lo, hi) of shift tuples (row 0 pinned to 0,
/// row 1 the most significant digit), keeping the best candidate.
void scan_range(const GameMatrix& m, const std::vector<ShiftDomain>& domains, std::uint64_t lo,
                std::uint64_t hi, Candidate& best) {
    const int na = m.rows();
    const std::size_t tail = static_cast<std::size_t>(na) - 1;
    std::vector<std::uint64_t> digit(tail, 0), radix(tail);
    for (std::size_t t = 0; t < tail; ++t) radix[t] = domains[t + 1].size();
    std::uint64_t rem = lo;
    for (std::size_t t = tail; t-- > 0;) {
        digit[t] = rem % radix[t];
        rem /= radix[t];
    }
    std::vector<Residue> rows(na);
    rows[0] = 0;
    for (std::size_t t = 0; t < tail; ++t) rows[t + 1] = domains[t + 1].at(digit[t]);

    std::vector<Residue> cols, scratch;
    for (std::uint64_t it = lo; it < hi; ++it) {
        std::int64_t ones = complete_columns(m, rows, cols, scratch);
        if (ones > best.ones ||
            (ones == best.ones && (rows < best.rows || (rows == best.rows && cols < best.cols)))) {
            best.ones = ones;
            best.rows = rows;
            best.cols = cols;
        }
        for (std::size_t t = tail; t-- > 0;) {
            if (++digit[t] < radix[t]) {
                rows[t + 1] = domains[t + 1].at(digit[t]);
                break;
            }
            digit[t] = 0;
            rows[t + 1] = domains[t + 1].at(0);
        }
    }
}

ClassicalResult exhaust_product(const GameMatrix& m, const std::vector<ShiftDomain>& domains,
                                int workers, ClassicalAlgorithm algo) {
    std::uint64_t total = 1;
    for (std::size_t i = 1; i < domains.size(); ++i) total *= domains[i].size();

    std::vector<std::optional<Candidate>> partial(std::max(1, workers));
    for_each_chunk(total, workers, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
        Candidate best;
        scan_range(m, domains, lo, hi, best);
        partial[chunk] = std::move(best);
    });
    Candidate best;
    for (auto& p : partial)
        if (p && better(*p, best)) best = std::move(*p);
    return finish(m, std::move(best), algo);
}

} // namespace

std::int64_t ones_count_under(const GameMatrix& m, const ShiftAssignment& s) {
    if (s.row_shifts.size() != static_cast<std::size_t>(m.rows()) ||
        s.col_shifts.size() != static_cast<std::size_t>(m.cols()))
        throw InputError("shift assignment shape does not match the matrix");
    const Int& d = m.modulus();
    std::int64_t count = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (mod_add(mod_add(m.at(i, j), mod_reduce(s.row_shifts[i], d), d),
                        mod_reduce(s.col_shifts[j], d), d) == 0)
                ++count;
    return count;
}

ClassicalResult contradiction_number_naive(const GameMatrix& m, const ClassicalBudget& budget) {
    const Int& d = m.modulus();
    const int na = m.rows(), nb = m.cols();
    Int outer = 1;
    for (int i = 1; i < na; ++i) outer *= d;
    if (outer * na * nb > budget.naive_ops)
        throw BudgetExceeded("naive enumeration needs " + Int(outer * na * nb).str() +
                                 " residue evaluations, over the cap of " +
                                 std::to_string(budget.naive_ops),
                             0);
    std::vector<ShiftDomain> domains(na);
    domains[0].list = {Residue(0)};
    for (int i = 1; i < na; ++i) {
        domains[i].full = true;
        domains[i].d = d;
    }
    return exhaust_product(m, domains, budget.workers, ClassicalAlgorithm::naive);
}

namespace {

void path_dfs(const GameMatrix& m, int row, const Residue& r_value, std::vector<char>& row_used,
              std::vector<char>& col_used, std::vector<std::vector<Residue>>& found,
              std::uint64_t& steps, std::uint64_t cap) {
    const Int& d = m.modulus();
    for (int j = 0; j < m.cols(); ++j) {
        if (col_used[j]) continue;
        Residue c = mod_neg(mod_add(m.at(row, j), r_value, d), d);
        col_used[j] = 1;
        for (int v = 0; v < m.rows(); ++v) {
            if (row_used[v]) continue;
            if (++steps > cap)
                throw BudgetExceeded("path enumeration exceeded the cap of " + std::to_string(cap) +
                                         " extensions; raise the cap rather than trusting a "
                                         "truncated candidate set",
                                     steps);
            Residue r = mod_neg(mod_add(m.at(v, j), c, d), d);
            found[v].push_back(r);
            row_used[v] = 1;
            path_dfs(m, v, r, row_used, col_used, found, steps, cap);
            row_used[v] = 0;
        }
        col_used[j] = 0;
    }
}

} // namespace

ClassicalResult contradiction_number_path_gauge(const GameMatrix& m, const ClassicalBudget& budget) {
    const int na = m.rows(), nb = m.cols();
    std::vector<std::vector<Residue>> found(na);
    std::vector<char> row_used(na, 0), col_used(nb, 0);
    row_used[0] = 1;
    std::uint64_t steps = 0;
    path_dfs(m, 0, Residue(0), row_used, col_used, found, steps, budget.path_steps);

    std::vector<ShiftDomain> domains(na);
    domains[0].list = {Residue(0)};
    for (int i = 1; i < na; ++i) {
        std::sort(found[i].begin(), found[i].end());
        found[i].erase(std::unique(found[i].begin(), found[i].end()), found[i].end());
        domains[i].list = std::move(found[i]);
    }
    Int evals = na * nb;
    for (int i = 1; i < na; ++i) evals *= static_cast<std::int64_t>(domains[i].list.size());
    if (evals > budget.path_evals)
        throw BudgetExceeded("candidate product needs " + evals.str() +
                                 " residue evaluations, over the cap of " +
                                 std::to_string(budget.path_evals),
                             steps);
    return exhaust_product(m, domains, budget.workers, ClassicalAlgorithm::path_gauge);
}

Rat classical_value(const ClassicalResult& r, const GameMatrix& m) {
    std::int64_t cells = static_cast<std::int64_t>(m.rows()) * m.cols();
    if (r.beta_c < 0 || r.beta_c > cells)
        throw ConsistencyError("contradiction count out of range for this matrix");
    return Rat(1) - Rat(r.beta_c, cells);
}

} // namespace lingame
