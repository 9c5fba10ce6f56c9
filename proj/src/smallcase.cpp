#include "lingame/smallcase.hpp"

#include <algorithm>

#include "lingame/errors.hpp"

namespace lingame {

std::int64_t diagonal_beta(const std::vector<Residue>& diag_exponents, int n, const Int& d) {
    if (n < 3) throw InputError("diagonal closed form needs n >= 3");
    if (diag_exponents.size() != static_cast<std::size_t>(n))
        throw InputError("diagonal length does not match n");
    std::vector<Residue> diag;
    diag.reserve(diag_exponents.size());
    for (const auto& v : diag_exponents) diag.push_back(mod_reduce(v, d));

    std::int64_t nonzero = std::count_if(diag.begin(), diag.end(),
                                         [](const Residue& v) { return v != 0; });
    if (n >= 4 || nonzero < 3) return nonzero;

    // n = 3, all nonzero: beta drops to 2 iff some entry's inverse equals
    // both of the others
    for (int a = 0; a < 3; ++a) {
        Residue inv = mod_neg(diag[a], d);
        if (diag[(a + 1) % 3] == inv && diag[(a + 2) % 3] == inv) return 2;
    }
    return 3;
}

std::int64_t diagonal_beta(const GameMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("diagonal closed form needs a square matrix");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0)
                throw InputError("matrix has a nonzero exponent off the diagonal");
    std::vector<Residue> diag;
    for (int i = 0; i < m.rows(); ++i) diag.push_back(m.at(i, i));
    return diagonal_beta(diag, m.rows(), m.modulus());
}

std::int64_t one_row_beta(const std::vector<Residue>& row_exponents) {
    if (row_exponents.empty()) throw InputError("row must be non-empty");
    std::vector<Residue> sorted = row_exponents;
    std::sort(sorted.begin(), sorted.end());
    std::int64_t best = 0, run = 1;
    for (std::size_t t = 1; t <= sorted.size(); ++t) {
        if (t < sorted.size() && sorted[t] == sorted[t - 1]) {
            ++run;
        } else {
            best = std::max(best, run);
            run = 1;
        }
    }
    return static_cast<std::int64_t>(sorted.size()) - best;
}

std::int64_t one_row_beta(const GameMatrix& m) {
    int nontrivial_row = -1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) {
                if (nontrivial_row != -1 && nontrivial_row != i)
                    throw InputError("nonzero exponents span more than one row");
                nontrivial_row = i;
            }
    int row = nontrivial_row == -1 ? m.rows() - 1 : nontrivial_row;
    std::vector<Residue> vals;
    for (int j = 0; j < m.cols(); ++j) vals.push_back(m.at(row, j));
    return one_row_beta(vals);
}

ClassifyResult classify_3x3(const Standard3x3& g) {
    const Int& d = g.d;
    if (d < 2) throw InputError("modulus must be at least 2");
    const Residue w = mod_reduce(g.w, d), x = mod_reduce(g.x, d), y = mod_reduce(g.y, d),
                  z = mod_reduce(g.z, d);
    const int nonzero = (w != 0) + (x != 0) + (y != 0) + (z != 0);

    if (nonzero == 0) return {0, "all-zero"};
    if (nonzero == 1) return {1, "one-nonzero"};

    if (nonzero == 2) {
        // aligned pairs share a row or column of the full matrix
        const std::pair<const Residue*, const Residue*> aligned[] = {
            {&w, &x}, {&y, &z}, {&w, &y}, {&x, &z}};
        for (auto [a, b] : aligned)
            if (*a != 0 && *b != 0)
                return *a == *b ? ClassifyResult{1, "two-aligned-equal"}
                                : ClassifyResult{2, "two-aligned-distinct"};
        return {2, "two-diagonal"};
    }

    if (nonzero == 3) {
        // q is diagonally opposite the zero; u, v share a line with q
        Residue q, u, v;
        if (w == 0) { q = z; u = x; v = y; }
        else if (x == 0) { q = y; u = w; v = z; }
        else if (y == 0) { q = x; u = w; v = z; }
        else { q = w; u = x; v = y; }
        if (q == u || q == v) return {2, "three-escape-equal"};
        if (q == mod_add(u, v, d)) return {2, "three-escape-sum"};
        return {3, "three-generic"};
    }

    // all four nonzero
    if (w == x && x == y && y == z) return {1, "four-all-equal"};
    if ((w == x && x == y) || (w == x && x == z) || (w == y && y == z) || (x == y && y == z))
        return {2, "four-three-equal"};
    if (w == x && y == z) return {2, "four-row-pairs"};
    if (w == y && x == z) return {2, "four-col-pairs"};
    if (w == z && x == y) return {3, "four-diag-pairs"};
    if (w == x || w == y || w == z || x == y || x == z || y == z) return {3, "four-one-pair"};

    // all distinct: the five closing conditions of the length-6 cycles
    if (mod_add(x, y, d) == mod_add(w, z, d)) return {3, "four-distinct-cycle-1"};
    if (mod_add(x, y, d) == z) return {3, "four-distinct-cycle-2"};
    if (x == mod_add(w, z, d)) return {3, "four-distinct-cycle-3"};
    if (mod_add(x, y, d) == w) return {3, "four-distinct-cycle-4"};
    if (y == mod_add(w, z, d)) return {3, "four-distinct-cycle-5"};
    return {4, "four-distinct-generic"};
}

ClassifyResult classify_3x3(const GameMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw InputError("classifier expects a 3x3 matrix");
    for (int j = 0; j < 3; ++j)
        if (m.at(0, j) != 0)
            throw InputError("classifier expects a gauged matrix (zero first row and column)");
    for (int i = 0; i < 3; ++i)
        if (m.at(i, 0) != 0)
            throw InputError("classifier expects a gauged matrix (zero first row and column)");
    return classify_3x3(Standard3x3{m.modulus(), m.at(1, 1), m.at(1, 2), m.at(2, 1), m.at(2, 2)});
}

} // namespace lingame
