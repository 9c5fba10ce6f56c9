#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lingame/numeric.hpp"

namespace lingame {

/// Exponent matrix of a linear game: entry (i,j) holds k_ij in Z_d, the
/// shift the players must realize on input pair (i,j). Immutable value;
/// every entry is kept reduced into [0, d).
class GameMatrix {
public:
    GameMatrix(int n_a, int n_b, Int d, std::vector<Int> entries);

    static GameMatrix zeros(int n_a, int n_b, Int d);

    int rows() const { return n_a_; }
    int cols() const { return n_b_; }
    const Int& modulus() const { return d_; }
    const Residue& at(int i, int j) const { return k_[static_cast<std::size_t>(i) * n_b_ + j]; }
    const std::vector<Residue>& entries() const { return k_; }

    bool operator==(const GameMatrix&) const = default;

private:
    int n_a_;
    int n_b_;
    Int d_;
    std::vector<Residue> k_; // row-major
};

struct RowMult { int row; Residue exponent; };
struct ColMult { int col; Residue exponent; };
struct RowSwap { int a; int b; };
struct ColSwap { int a; int b; };
struct Transpose {};

/// A relabeling that preserves classical and quantum values: multiply a
/// row/column by a d-th root of unity (add an exponent), swap rows or
/// columns, or transpose.
using EquivalenceMove = std::variant<RowMult, ColMult, RowSwap, ColSwap, Transpose>;

GameMatrix apply_move(const GameMatrix& m, const EquivalenceMove& mv);
GameMatrix apply_moves(const GameMatrix& m, const std::vector<EquivalenceMove>& moves);

/// Move undoing mv on a matrix with modulus d.
EquivalenceMove inverse_move(const EquivalenceMove& mv, const Int& d);

/// Gauge every matrix so row 0 and column 0 are all zero: subtract k_i0
/// from row i, then the resulting k_0j from column j. Returns the gauged
/// matrix and the move list realizing it.
std::pair<GameMatrix, std::vector<EquivalenceMove>> standard_form(const GameMatrix& m);

/// Residual of the 2x2 minor on rows {i,s}, columns {j,t}:
/// (k_ij + k_st - k_it - k_sj) mod d. Zero iff the minor vanishes.
Residue minor2_residual(const GameMatrix& m, int i, int s, int j, int t);

/// Parse the JSON game-file format (see README). Unknown fields rejected;
/// exponents reduced mod d.
GameMatrix parse_game(const std::string& text);

/// Canonical JSON rendering; parse_game(serialize_game(m)) == m and the
/// byte round trip holds on canonically ordered input.
std::string serialize_game(const GameMatrix& m);

} // namespace lingame
