#include "lingame/game.hpp"

#include <nlohmann/json.hpp>

#include "lingame/errors.hpp"

namespace lingame {

namespace {

void check_index(int v, int bound, const char* what) {
    if (v < 0 || v >= bound)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(v) +
                                " out of range [0, " + std::to_string(bound) + ")");
}

} // namespace

GameMatrix::GameMatrix(int n_a, int n_b, Int d, std::vector<Int> entries)
    : n_a_(n_a), n_b_(n_b), d_(std::move(d)), k_(std::move(entries)) {
    if (n_a_ < 2 || n_b_ < 2)
        throw InputError("game needs at least 2 inputs per side, got " +
                         std::to_string(n_a_) + "x" + std::to_string(n_b_));
    if (d_ < 2) throw InputError("modulus d must be at least 2");
    if (k_.size() != static_cast<std::size_t>(n_a_) * n_b_)
        throw InputError("entry count does not match matrix shape");
    for (Int& v : k_) v = mod_reduce(std::move(v), d_);
}

GameMatrix GameMatrix::zeros(int n_a, int n_b, Int d) {
    return GameMatrix(n_a, n_b, std::move(d),
                      std::vector<Int>(static_cast<std::size_t>(n_a) * n_b, Int(0)));
}

GameMatrix apply_move(const GameMatrix& m, const EquivalenceMove& mv) {
    const Int& d = m.modulus();
    std::vector<Int> k = m.entries();
    const int na = m.rows(), nb = m.cols();
    auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * nb + j; };

    return std::visit(
        [&](const auto& move) -> GameMatrix {
            using T = std::decay_t<decltype(move)>;
            if constexpr (std::is_same_v<T, RowMult>) {
                check_index(move.row, na, "row");
                Residue e = mod_reduce(move.exponent, d);
                for (int j = 0; j < nb; ++j) k[idx(move.row, j)] = mod_add(k[idx(move.row, j)], e, d);
                return GameMatrix(na, nb, d, std::move(k));
            } else if constexpr (std::is_same_v<T, ColMult>) {
                check_index(move.col, nb, "column");
                Residue e = mod_reduce(move.exponent, d);
                for (int i = 0; i < na; ++i) k[idx(i, move.col)] = mod_add(k[idx(i, move.col)], e, d);
                return GameMatrix(na, nb, d, std::move(k));
            } else if constexpr (std::is_same_v<T, RowSwap>) {
                check_index(move.a, na, "row");
                check_index(move.b, na, "row");
                for (int j = 0; j < nb; ++j) std::swap(k[idx(move.a, j)], k[idx(move.b, j)]);
                return GameMatrix(na, nb, d, std::move(k));
            } else if constexpr (std::is_same_v<T, ColSwap>) {
                check_index(move.a, nb, "column");
                check_index(move.b, nb, "column");
                for (int i = 0; i < na; ++i) std::swap(k[idx(i, move.a)], k[idx(i, move.b)]);
                return GameMatrix(na, nb, d, std::move(k));
            } else {
                static_assert(std::is_same_v<T, Transpose>);
                std::vector<Int> t(k.size());
                for (int i = 0; i < na; ++i)
                    for (int j = 0; j < nb; ++j) t[static_cast<std::size_t>(j) * na + i] = k[idx(i, j)];
                return GameMatrix(nb, na, d, std::move(t));
            }
        },
        mv);
}

GameMatrix apply_moves(const GameMatrix& m, const std::vector<EquivalenceMove>& moves) {
    GameMatrix out = m;
    for (const auto& mv : moves) out = apply_move(out, mv);
    return out;
}

EquivalenceMove inverse_move(const EquivalenceMove& mv, const Int& d) {
    return std::visit(
        [&](const auto& move) -> EquivalenceMove {
            using T = std::decay_t<decltype(move)>;
            if constexpr (std::is_same_v<T, RowMult>) {
                return RowMult{move.row, mod_neg(mod_reduce(move.exponent, d), d)};
            } else if constexpr (std::is_same_v<T, ColMult>) {
                return ColMult{move.col, mod_neg(mod_reduce(move.exponent, d), d)};
            } else {
                return move; // swaps and transpose are involutions
            }
        },
        mv);
}

std::pair<GameMatrix, std::vector<EquivalenceMove>> standard_form(const GameMatrix& m) {
    const Int& d = m.modulus();
    std::vector<EquivalenceMove> moves;
    GameMatrix out = m;
    for (int i = 0; i < m.rows(); ++i) {
        if (out.at(i, 0) != 0) {
            moves.push_back(RowMult{i, mod_neg(out.at(i, 0), d)});
            out = apply_move(out, moves.back());
        }
    }
    for (int j = 0; j < m.cols(); ++j) {
        if (out.at(0, j) != 0) {
            moves.push_back(ColMult{j, mod_neg(out.at(0, j), d)});
            out = apply_move(out, moves.back());
        }
    }
    return {std::move(out), std::move(moves)};
}

Residue minor2_residual(const GameMatrix& m, int i, int s, int j, int t) {
    check_index(i, m.rows(), "row");
    check_index(s, m.rows(), "row");
    check_index(j, m.cols(), "column");
    check_index(t, m.cols(), "column");
    if (i == s || j == t) throw std::invalid_argument("minor needs two distinct rows and columns");
    const Int& d = m.modulus();
    return mod_sub(mod_add(m.at(i, j), m.at(s, t), d), mod_add(m.at(i, t), m.at(s, j), d), d);
}

GameMatrix parse_game(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("game file must be a JSON object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "n_a" && key != "n_b" && key != "d" && key != "k")
            throw InputError("unknown field \"" + key + "\" in game file");
    }
    for (const char* key : {"n_a", "n_b", "d", "k"})
        if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");

    if (!j["n_a"].is_number_integer() || !j["n_b"].is_number_integer())
        throw InputError("n_a and n_b must be integers");
    int n_a = j["n_a"].get<int>();
    int n_b = j["n_b"].get<int>();
    if (n_a < 2 || n_b < 2) throw InputError("n_a and n_b must be at least 2");

    if (!j["d"].is_string()) throw InputError("d must be a decimal string");
    Int d = parse_decimal(j["d"].get<std::string>());
    if (d < 2) throw InputError("d must be at least 2");

    if (!j["k"].is_array() || j["k"].size() != static_cast<std::size_t>(n_a))
        throw InputError("k must be an array of n_a rows");
    std::vector<Int> entries;
    entries.reserve(static_cast<std::size_t>(n_a) * n_b);
    for (const auto& row : j["k"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n_b))
            throw InputError("ragged k: every row must have n_b entries");
        for (const auto& cell : row) {
            if (!cell.is_string()) throw InputError("exponents must be decimal strings");
            entries.push_back(parse_decimal(cell.get<std::string>()));
        }
    }
    return GameMatrix(n_a, n_b, std::move(d), std::move(entries));
}

std::string serialize_game(const GameMatrix& m) {
    nlohmann::json j;
    j["n_a"] = m.rows();
    j["n_b"] = m.cols();
    j["d"] = m.modulus().str();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).str());
        rows.push_back(std::move(row));
    }
    j["k"] = std::move(rows);
    return j.dump();
}

} // namespace lingame
