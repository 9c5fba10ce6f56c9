#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lingame/game.hpp"
#include "lingame/numeric.hpp"

namespace lingame {

/// The four free entries of a gauged 3x3 matrix [[0,0,0],[0,w,x],[0,y,z]].
struct Standard3x3 {
    Int d;
    Residue w, x, y, z;
};

struct ClassifyResult {
    int beta = 0;
    std::string rule; // which branch of the decision tree fired
};

/// Contradiction number of an n x n matrix whose nonzero exponents sit on
/// the diagonal. For n >= 4 it is the nonzero count; for n = 3 with all
/// three nonzero it drops to 2 exactly when one entry's additive inverse
/// equals both others.
std::int64_t diagonal_beta(const std::vector<Residue>& diag_exponents, int n, const Int& d);
std::int64_t diagonal_beta(const GameMatrix& m);

/// Contradiction number when all nonzero exponents share one row: the row
/// length minus the highest multiplicity in the row.
std::int64_t one_row_beta(const std::vector<Residue>& row_exponents);
std::int64_t one_row_beta(const GameMatrix& m);

/// Full closed-form decision tree for gauged 3x3 games; beta in 0..4 plus
/// the rule tag that produced it.
ClassifyResult classify_3x3(const Standard3x3& g);
ClassifyResult classify_3x3(const GameMatrix& m);

} // namespace lingame
