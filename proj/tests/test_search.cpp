#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gallai/errors.hpp"
#include "gallai/rainbow.hpp"
#include "gallai/search.hpp"
#include "support/oracles.hpp"

using namespace gallai;
using namespace gallai::testing;

TEST_CASE("exact tau tiny cases") {
    auto r3 = exact_tau(3, 3, 3);
    CHECK(r3.value == 1);
    auto r4 = exact_tau(4, 3, 3);
    CHECK(r4.value == 1);
}

TEST_CASE("branch-and-bound equals exhaustive equals the plain oracle") {
    for (Vertex n = 3; n <= 6; ++n) {
        auto bnb = exact_tau(n, 3, 3, SearchMethod::branch_and_bound);
        auto exhaustive = exact_tau(n, 3, 3, SearchMethod::exhaustive);
        uint64_t oracle = tau_by_plain_enumeration(n, 3, 3);
        CHECK(bnb.value == oracle);
        CHECK(exhaustive.value == oracle);
    }
    // a t = 4 instance
    auto bnb4 = exact_tau(5, 4, 6, SearchMethod::branch_and_bound);
    auto ex4 = exact_tau(5, 4, 6, SearchMethod::exhaustive);
    uint64_t oracle4 = tau_by_plain_enumeration(5, 4, 6);
    CHECK(bnb4.value == oracle4);
    CHECK(ex4.value == oracle4);
    // more colours than 3
    CHECK(exact_tau(5, 3, 4).value == tau_by_plain_enumeration(5, 3, 4));
}

TEST_CASE("known tau values and witness certification") {
    auto r6 = exact_tau(6, 3, 3);
    CHECK(r6.value == 4); // the m=2 hypercube colouring is optimal here
    auto set = enumerate_rainbow_cliques(r6.witness, 3);
    CHECK(set.edge_disjoint);
    CHECK(set.size() == r6.value);
    CHECK(r6.stats.nodes_explored > 0);
}

TEST_CASE("monotonicity and the trivial bounds") {
    uint64_t prev = 0;
    for (Vertex n = 3; n <= 6; ++n) {
        auto r = exact_tau(n, 3, 3);
        CHECK(r.value >= n / 3);
        CHECK(r.value <= static_cast<uint64_t>(n) * (n - 1) / 2 / 3);
        CHECK(r.value >= prev);
        prev = r.value;
    }
}

TEST_CASE("three colours reach at least 2/9 of the many-colour optimum") {
    for (Vertex n = 4; n <= 5; ++n) {
        uint64_t g3 = exact_tau(n, 3, 3).value;
        for (Colour k = 4; k <= 6; ++k) {
            uint64_t gk = exact_tau(n, 3, k).value;
            CHECK(g3 <= gk);
            CHECK(2 * gk <= 9 * g3);
        }
    }
}

TEST_CASE("search guards") {
    CHECK_THROWS_AS(exact_tau(9, 3, 3), size_limit_error);
    CHECK_THROWS_AS(exact_tau(4, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(exact_tau(3, 4, 6), std::invalid_argument);
    SearchLimits tight;
    tight.max_nodes = 10;
    CHECK_THROWS_AS(exact_tau(6, 3, 3, SearchMethod::branch_and_bound, tight), size_limit_error);
}

TEST_CASE("exact gamma small instances") {
    auto r111 = exact_gamma(1, 1, 1);
    CHECK(r111.value == 1);

    auto oracle211 = gamma_by_full_enumeration(2, 1, 1);
    auto r211 = exact_gamma(2, 1, 1);
    CHECK(r211.value == oracle211.best_total);
    CHECK(r211.max_red == oracle211.max_red);
    CHECK(r211.max_blue == oracle211.max_blue);

    auto oracle133 = gamma_by_full_enumeration(1, 3, 3);
    auto r133 = exact_gamma(1, 3, 3);
    CHECK(r133.value == oracle133.best_total);
    CHECK(r133.value >= 3);       // the sharp construction at n = 7
    CHECK(r133.value <= 4 * 7 - 10);
    CHECK(r133.max_red <= 2 * 7 - 5);
    CHECK(r133.max_blue <= 2 * 7 - 5);

    auto oracle222 = gamma_by_full_enumeration(2, 2, 2);
    auto r222 = exact_gamma(2, 2, 2);
    CHECK(r222.value == oracle222.best_total);
    CHECK(r222.max_red == oracle222.max_red);

    // witness re-verifies
    CHECK(is_good(r133.witness).good);
    CHECK(count_monochromatic_triangles(r133.witness).total() == r133.value);

    CHECK_THROWS_AS(exact_gamma(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(exact_gamma(4, 4, 4), size_limit_error);
}

TEST_CASE("local search returns the certified seed at budget zero") {
    auto r = local_search_tau(11, 3, 3, 0, 1);
    CHECK(r.value >= 12); // the m=3 hypercube seed
    CHECK(r.method == SearchMethod::heuristic);
    auto set = enumerate_rainbow_cliques(r.witness, 3);
    CHECK(set.edge_disjoint);
    CHECK(set.size() == r.value);

    auto r4 = local_search_tau(8, 4, 6, 0, 1);
    CHECK(r4.value >= 2); // disjoint K_4 seed
}

TEST_CASE("local search only improves and stays feasible") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto base = local_search_tau(9, 3, 3, 0, seed);
        auto improved = local_search_tau(9, 3, 3, 400, seed);
        CHECK(improved.value >= base.value);
        auto set = enumerate_rainbow_cliques(improved.witness, 3);
        CHECK(set.edge_disjoint);
        CHECK(set.size() == improved.value);
    }
}

TEST_CASE("searches are deterministic") {
    auto a = exact_tau(5, 3, 3);
    auto b = exact_tau(5, 3, 3);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.nodes_explored == b.stats.nodes_explored);

    auto l1 = local_search_tau(9, 3, 3, 200, 42);
    auto l2 = local_search_tau(9, 3, 3, 200, 42);
    CHECK(l1.value == l2.value);
    CHECK(l1.witness == l2.witness);
}
