#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lingame/classical.hpp"
#include "lingame/errors.hpp"
#include "lingame/smallcase.hpp"
#include "oracles.hpp"

using namespace lingame;
using oracle::mk;

namespace {

GameMatrix diag_matrix(const std::vector<long long>& diag, long long d) {
    int n = static_cast<int>(diag.size());
    std::vector<long long> k(n * n, 0);
    for (int i = 0; i < n; ++i) k[i * n + i] = diag[i];
    return mk(n, n, d, k);
}

std::vector<Int> to_ints(const std::vector<long long>& v) {
    return std::vector<Int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("diagonal_beta pinned cases") {
    CHECK(diagonal_beta(to_ints({1, 2, 3, 4}), 4, 5) == 4);
    CHECK(diagonal_beta(to_ints({1, 3, 3}), 3, 4) == 2);
    CHECK(diagonal_beta(to_ints({1, 1, 1}), 3, 5) == 3);
    CHECK(diagonal_beta(to_ints({0, 2, 3}), 3, 5) == 2);
    CHECK(diagonal_beta(to_ints({0, 0, 0}), 3, 5) == 0);

    CHECK_THROWS_AS(diagonal_beta(to_ints({1, 2}), 2, 5), InputError);
    CHECK_THROWS_AS(diagonal_beta(to_ints({1, 2}), 3, 5), InputError);
    CHECK_THROWS_AS(diagonal_beta(mk(3, 3, 5, {0, 1, 0, 0, 2, 0, 0, 0, 3})), InputError);
    CHECK(diagonal_beta(diag_matrix({1, 3, 3}, 4)) == 2);
}

TEST_CASE("diagonal_beta agrees with the solver") {
    SUBCASE("exhaustive for n in {3,4} and d up to 6") {
        for (int n : {3, 4}) {
            for (long long d = 2; d <= 6; ++d) {
                std::vector<long long> diag(n, 0);
                std::function<void(int)> sweep = [&](int cell) {
                    if (cell == n) {
                        GameMatrix m = diag_matrix(diag, d);
                        std::int64_t want = contradiction_number_naive(m).beta_c;
                        CHECK(diagonal_beta(m) == want);
                        if (n >= 4) {
                            std::int64_t nonzero =
                                std::count_if(diag.begin(), diag.end(),
                                              [](long long v) { return v != 0; });
                            CHECK(want == nonzero);
                        }
                        return;
                    }
                    for (long long v = 0; v < d; ++v) {
                        diag[cell] = v;
                        sweep(cell + 1);
                    }
                };
                sweep(0);
            }
        }
    }
    SUBCASE("seeded larger instances") {
        std::mt19937 rng(51);
        for (int t = 0; t < 500; ++t) {
            std::uniform_int_distribution<int> nn(4, 6);
            int n = nn(rng);
            std::uniform_int_distribution<long long> dd(2, n <= 5 ? 4 : 3);
            long long d = dd(rng);
            std::uniform_int_distribution<long long> v(0, d - 1);
            std::vector<long long> diag(n);
            for (auto& x : diag) x = v(rng);
            GameMatrix m = diag_matrix(diag, d);
            CHECK(diagonal_beta(m) == contradiction_number_naive(m).beta_c);
        }
    }
}

TEST_CASE("one_row_beta") {
    CHECK(one_row_beta(to_ints({0, 1, 1, 2})) == 2);
    CHECK(one_row_beta(to_ints({3, 3, 3})) == 0);
    CHECK(one_row_beta(to_ints({0, 1, 2, 3, 4})) == 4);
    CHECK_THROWS_AS(one_row_beta(std::vector<Int>{}), InputError);

    CHECK(one_row_beta(mk(3, 4, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2})) == 2);
    CHECK_THROWS_AS(one_row_beta(mk(3, 3, 3, {0, 0, 0, 0, 1, 0, 0, 0, 1})), InputError);

    SUBCASE("exhaustive rows for shapes up to 4 wide, d up to 6") {
        for (int na : {2, 4}) {
            for (int nb = 2; nb <= 4; ++nb) {
                for (long long d = 2; d <= 6; ++d) {
                    std::vector<long long> k(na * nb, 0);
                    std::function<void(int)> sweep = [&](int j) {
                        if (j == nb) {
                            GameMatrix m = mk(na, nb, d, k);
                            CHECK(one_row_beta(m) == contradiction_number_naive(m).beta_c);
                            return;
                        }
                        for (long long v = 0; v < d; ++v) {
                            k[(na - 1) * nb + j] = v;
                            sweep(j + 1);
                        }
                    };
                    sweep(0);
                }
            }
        }
    }
    SUBCASE("seeded larger instances") {
        std::mt19937 rng(52);
        for (int t = 0; t < 500; ++t) {
            std::uniform_int_distribution<long long> dd(2, 8);
            std::uniform_int_distribution<int> nn(2, 6);
            long long d = dd(rng);
            int na = nn(rng), nb = nn(rng);
            if (na > 4) d = std::min<long long>(d, 4);
            std::uniform_int_distribution<long long> v(0, d - 1);
            std::vector<long long> k(na * nb, 0);
            for (int j = 0; j < nb; ++j) k[(na - 1) * nb + j] = v(rng);
            GameMatrix m = mk(na, nb, d, k);
            CHECK(one_row_beta(m) == contradiction_number_naive(m).beta_c);
        }
    }
}

TEST_CASE("classify_3x3 pinned cases") {
    ClassifyResult all_equal = classify_3x3(Standard3x3{5, 1, 1, 1, 1});
    CHECK(all_equal.beta == 1);
    CHECK(all_equal.rule == "four-all-equal");

    // the game claimed to have four contradictions actually has three: the
    // closing condition x + y = w fires (3 + 4 = 7 = 1 mod 6)
    ClassifyResult d6 = classify_3x3(Standard3x3{6, 1, 3, 4, 5});
    CHECK(d6.beta == 3);
    CHECK(d6.rule == "four-distinct-cycle-4");

    ClassifyResult d7 = classify_3x3(Standard3x3{7, 1, 2, 5, 3});
    CHECK(d7.beta == 4);
    CHECK(d7.rule == "four-distinct-generic");

    CHECK(classify_3x3(Standard3x3{5, 0, 0, 0, 0}).beta == 0);
    CHECK(classify_3x3(Standard3x3{5, 0, 0, 2, 0}).beta == 1);
    CHECK(classify_3x3(Standard3x3{5, 2, 2, 0, 0}).beta == 1);
    CHECK(classify_3x3(Standard3x3{5, 2, 3, 0, 0}).beta == 2);
    CHECK(classify_3x3(Standard3x3{5, 2, 0, 0, 2}).beta == 2);
    CHECK(classify_3x3(Standard3x3{5, 0, 2, 3, 2}).beta == 2);  // opposite equals a mate
    CHECK(classify_3x3(Standard3x3{7, 0, 2, 3, 5}).beta == 2);  // opposite equals the mates' sum
    CHECK(classify_3x3(Standard3x3{7, 0, 2, 3, 6}).beta == 3);
    CHECK(classify_3x3(Standard3x3{7, 2, 2, 5, 5}).beta == 2);
    CHECK(classify_3x3(Standard3x3{7, 2, 5, 2, 5}).beta == 2);
    CHECK(classify_3x3(Standard3x3{7, 2, 5, 5, 2}).beta == 3);
    CHECK(classify_3x3(Standard3x3{11, 2, 2, 2, 5}).beta == 2);
}

TEST_CASE("classify_3x3 matrix wrapper insists on the gauge") {
    CHECK(classify_3x3(mk(3, 3, 6, {0, 0, 0, 0, 1, 3, 0, 4, 5})).beta == 3);
    CHECK_THROWS_AS(classify_3x3(mk(3, 3, 6, {1, 0, 0, 0, 1, 3, 0, 4, 5})), InputError);
}

TEST_CASE("classifier agrees with the solver for every gauged 3x3, small d") {
    for (long long d = 2; d <= 5; ++d) {
        for (long long w = 0; w < d; ++w)
            for (long long x = 0; x < d; ++x)
                for (long long y = 0; y < d; ++y)
                    for (long long z = 0; z < d; ++z) {
                        GameMatrix m = mk(3, 3, d, {0, 0, 0, 0, w, x, 0, y, z});
                        std::int64_t want = contradiction_number_naive(m).beta_c;
                        ClassifyResult got = classify_3x3(Standard3x3{Int(d), w, x, y, z});
                        CHECK_MESSAGE(got.beta == want,
                                      "d=", d, " (", w, ",", x, ",", y, ",", z, ") rule ", got.rule);
                    }
    }
}
