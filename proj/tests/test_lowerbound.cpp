#include <doctest.h>

#include <random>

#include "lingame/classical.hpp"
#include "lingame/constructions.hpp"
#include "lingame/cycles.hpp"
#include "lingame/errors.hpp"
#include "lingame/lowerbound.hpp"
#include "oracles.hpp"

using namespace lingame;
using oracle::mk;

namespace {

std::int64_t expected_degree(int n) {
    // cyclic permutations of S_n: sum over cycle lengths i of n!/((n-i)! i)
    auto fact = [](int v) {
        std::int64_t r = 1;
        for (int i = 2; i <= v; ++i) r *= i;
        return r;
    };
    std::int64_t total = 0;
    for (int i = 2; i <= n; ++i) total += fact(n) / (fact(n - i) * i);
    return total;
}

bool proper(const SimpleGraph& g, const std::vector<int>& coloring) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (g.adj[a][b] && coloring[a] == coloring[b]) return false;
    return true;
}

} // namespace

TEST_CASE("build_gn structure") {
    PermGraph g2 = build_gn(2);
    CHECK(g2.graph.n == 2);
    CHECK(g2.graph.edge_count() == 1);

    PermGraph g3 = build_gn(3);
    CHECK(g3.graph.n == 6);
    CHECK(g3.graph.edge_count() == 15); // complete graph

    PermGraph g4 = build_gn(4);
    CHECK(g4.graph.n == 24);
    for (int v = 0; v < 24; ++v) CHECK(g4.graph.degree(v) == 20);

    for (int n : {2, 3, 4, 5}) {
        PermGraph g = build_gn(n);
        CHECK(g.graph.degree(0) == expected_degree(n));
    }
    CHECK_THROWS_AS(build_gn(6), InputError);
    CHECK_THROWS_AS(build_gn(1), InputError);
}

TEST_CASE("chromatic_bounds") {
    ChromaticBounds k6 = chromatic_bounds(build_gn(3));
    CHECK(k6.clique_bound == 6);
    CHECK(k6.independence_number == 1);
    CHECK(k6.independence_bound == 6);
    CHECK(k6.hoffman_bound == 6); // spectrum 5, -1 x5

    ChromaticBounds g4 = chromatic_bounds(build_gn(4));
    CHECK(g4.independence_number == 4);
    CHECK(g4.independence_bound == 6);
    CHECK(g4.clique_bound == 6);
    CHECK(g4.hoffman_bound == 6); // lambda_min = -4
}

TEST_CASE("every lower bound sits under the exact chromatic number") {
    for (int n : {2, 3, 4}) {
        PermGraph g = build_gn(n);
        ChromaticBounds b = chromatic_bounds(g);
        ChromaticResult chi = exact_chromatic(g);
        REQUIRE(chi.exact);
        CHECK(b.clique_bound <= chi.upper);
        CHECK(b.independence_bound <= chi.upper);
        CHECK(b.hoffman_bound <= chi.upper);
    }
}

TEST_CASE("exact_chromatic") {
    ChromaticResult k6 = exact_chromatic(build_gn(3));
    CHECK(k6.exact);
    CHECK(k6.upper == 6);

    PermGraph g4 = build_gn(4);
    ChromaticResult c4 = exact_chromatic(g4);
    CHECK(c4.exact);
    CHECK(c4.upper == 6);
    CHECK(proper(g4.graph, c4.coloring));

    SimpleGraph five;
    five.n = 5;
    five.adj.assign(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i) five.add_edge(i, (i + 1) % 5);
    ChromaticResult odd = exact_chromatic(five);
    CHECK(odd.exact);
    CHECK(odd.upper == 3);
    CHECK(proper(five, odd.coloring));

    ChromaticResult starved = exact_chromatic(build_gn(4), 3);
    CHECK_FALSE(starved.exact);
    CHECK(starved.lower <= starved.upper);
    CHECK(proper(g4.graph, starved.coloring));
}

TEST_CASE("min_outputs_lower_bound") {
    CHECK(min_outputs_lower_bound(2) == 2);
    CHECK(min_outputs_lower_bound(3) == 6);  // chromatic number dominates the floor 5
    CHECK(min_outputs_lower_bound(4) == 10); // the floor (n-1)^2+1 dominates chi = 6
}

TEST_CASE("the n = 5 permutation graph pins its chromatic number") {
    PermGraph g5 = build_gn(5);
    ChromaticBounds b = chromatic_bounds(g5);
    CHECK(b.independence_number == 4); // so chi >= 120/4 = 30
    CHECK(b.independence_bound == 30);
    ChromaticResult chi = exact_chromatic(g5, 2'000'000, b.independence_bound);
    CHECK(chi.exact);
    CHECK(chi.upper == 30); // a 30-coloring exists, so chi(G_5) = 30
    CHECK(proper(g5.graph, chi.coloring));
    CHECK(min_outputs_lower_bound(5) == 30);
}

TEST_CASE("permutation_certificate") {
    CHECK(permutation_certificate(rudin_game(3, 3)).pass);
    CHECK(permutation_certificate(binary_game(3, 3)).pass);

    PermutationCertificate zero = permutation_certificate(GameMatrix::zeros(3, 3, Int(5)));
    CHECK_FALSE(zero.pass);
    CHECK(zero.violating_pair.has_value());

    CHECK_THROWS_AS(permutation_certificate(mk(2, 3, 2, {0, 0, 0, 0, 0, 0})), InputError);
    CHECK_THROWS_AS(permutation_certificate(GameMatrix::zeros(4, 4, Int(3)), 3), InputError);
}

TEST_CASE("the three maximality routes agree") {
    std::mt19937 rng(61);
    for (int t = 0; t < 120; ++t) {
        GameMatrix m = oracle::random_game(rng, 3, 8, 3);
        if (m.rows() != m.cols()) continue;
        bool solver = contradiction_number_naive(m).beta_c ==
                      static_cast<std::int64_t>(m.rows() - 1) * (m.cols() - 1);
        bool cert = certify_max_contradictions(m).verdict ==
                    MaximalityCertificate::Verdict::maximal;
        bool perm = permutation_certificate(m).pass;
        CHECK(solver == cert);
        CHECK(cert == perm);
    }
}

TEST_CASE("exhaustive_min_d") {
    SUBCASE("n = 2 bottoms out at the CHSH matrix") {
        MinDResult r = exhaustive_min_d(2, 4);
        REQUIRE(r.d_min.has_value());
        CHECK(*r.d_min == 2);
        CHECK(*r.witness == mk(2, 2, 2, {0, 0, 0, 1}));
        CHECK(r.ruled_out.empty());
    }
    SUBCASE("n = 3 finds nothing below the algebraic floor") {
        MinDResult r = exhaustive_min_d(3, 4);
        CHECK_FALSE(r.d_min.has_value());
        CHECK(r.ruled_out == std::vector<Int>{2, 3, 4});
    }
    SUBCASE("n = 3 resolves to seven outputs") {
        MinDResult r = exhaustive_min_d(3, 8);
        REQUIRE(r.d_min.has_value());
        CHECK(*r.d_min == 7);
        CHECK(r.ruled_out == std::vector<Int>{2, 3, 4, 5, 6});
        REQUIRE(r.witness.has_value());
        CHECK(*r.witness == mk(3, 3, 7, {0, 0, 0, 0, 1, 2, 0, 3, 6}));
        CHECK(contradiction_number_naive(*r.witness).beta_c == 4);
    }
    SUBCASE("the audit sweep agrees with the reduced one") {
        MinDResult fast = exhaustive_min_d(3, 7);
        MinDResult slow = exhaustive_min_d(3, 7, 2'000'000'000, true);
        CHECK(*fast.d_min == *slow.d_min);
        CHECK(*fast.witness == *slow.witness);
        CHECK(fast.candidates_tested < slow.candidates_tested);
    }
    SUBCASE("worker count does not change the witness") {
        MinDResult one = exhaustive_min_d(3, 7);
        MinDResult four = exhaustive_min_d(3, 7, 2'000'000'000, false, 4);
        CHECK(*one.d_min == *four.d_min);
        CHECK(*one.witness == *four.witness);
    }
    SUBCASE("budget refusal reports progress") {
        CHECK_THROWS_AS(exhaustive_min_d(3, 8, 50), BudgetExceeded);
    }
}
