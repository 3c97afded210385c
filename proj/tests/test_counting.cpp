#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gallai/constructions.hpp"
#include "gallai/counting.hpp"
#include "gallai/errors.hpp"
#include "gallai/rainbow.hpp"
#include "support/oracles.hpp"
#include "support/samplers.hpp"

using namespace gallai;
using namespace gallai::testing;

namespace {

// ordered quadruple scan, the quartic reference for nice_quadruples
uint64_t nice_quadruples_quartic(const CompleteColouring& c) {
    uint64_t total = 0;
    Vertex n = c.n();
    for (Vertex g = 0; g < n; ++g)
        for (Vertex r = 0; r < n; ++r)
            for (Vertex b = 0; b < n; ++b)
                for (Vertex u = 0; u < n; ++u) {
                    if (g == r || g == b || g == u || r == b || r == u || b == u) continue;
                    if (c.colour(g, r) == kBlue && c.colour(g, b) == kRed &&
                        c.colour(r, b) == kGreen && c.colour(g, u) == kGreen)
                        ++total;
                }
    return total;
}

} // namespace

TEST_CASE("c_rb on fixed instances") {
    CompleteColouring c(3, 3, 0);
    c.set_colour(0, 1, kRed);   // v-x red
    c.set_colour(0, 2, kBlue);  // v-y blue
    c.set_colour(1, 2, kGreen); // x-y green
    CHECK(c_rb(c, 0) == 1);
    CHECK(c_rb(c, 1) == 0);
    CHECK(c_rb(c, 2) == 0);

    CompleteColouring mono(7, 3, 0);
    for (Vertex v = 0; v < 7; ++v) CHECK(c_rb(mono, v) == 0);
    CHECK_THROWS_AS(c_rb(mono, 9), std::invalid_argument);
}

TEST_CASE("sum of c_rb equals the rainbow triangle count") {
    auto h2 = hypercube_colouring(2);
    uint64_t sum = 0;
    for (Vertex v = 0; v < h2.n(); ++v) sum += c_rb(h2, v);
    CHECK(sum == 4);

    SplitMix64 rng(61);
    for (int round = 0; round < 25; ++round) {
        Vertex n = 4 + static_cast<Vertex>(rng.next_below(8));
        auto c = random_complete_colouring(n, 3, rng);
        uint64_t total = 0;
        for (Vertex v = 0; v < n; ++v) total += c_rb(c, v);
        CHECK(total == brute_rainbow_cliques(c, 3).size());
    }
}

TEST_CASE("nice quadruples on the path pattern") {
    // u=0, v_G=1, v_R=2, v_B=3: 0-1 green, 1-2 blue, 1-3 red, 2-3 green, rest red
    CompleteColouring c(4, 3, kRed);
    c.set_colour(0, 1, kGreen);
    c.set_colour(1, 2, kBlue);
    c.set_colour(1, 3, kRed);
    c.set_colour(2, 3, kGreen);
    auto report = nice_quadruples(c);
    CHECK(report.total == 2); // (1,2,3,0) and (2,1,0,3)
    CHECK(report.total == report.per_vertex_sum);
    CHECK(report.total == nice_quadruples_quartic(c));
}

TEST_CASE("no green edges means no nice quadruples") {
    SplitMix64 rng(62);
    for (int round = 0; round < 5; ++round) {
        Vertex n = 4 + static_cast<Vertex>(rng.next_below(6));
        CompleteColouring c(n, 3, 0);
        for (Vertex u = 0; u + 1 < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                c.set_colour(u, v, static_cast<Colour>(rng.next_below(2))); // red/blue only
        auto report = nice_quadruples(c);
        CHECK(report.total == 0);
        CHECK(report.per_vertex_sum == 0);
    }
}

TEST_CASE("the double-counting identity holds on every 3-colouring") {
    auto h3 = nice_quadruples(hypercube_colouring(3));
    CHECK(h3.total == h3.per_vertex_sum);

    SplitMix64 rng(63);
    for (int round = 0; round < 40; ++round) {
        Vertex n = 4 + static_cast<Vertex>(rng.next_below(9));
        auto c = random_complete_colouring(n, 3, rng);
        auto report = nice_quadruples(c);
        CHECK(report.total == report.per_vertex_sum);
        if (n <= 10) CHECK(report.total == nice_quadruples_quartic(c));
    }
}

TEST_CASE("almost-Gallai inputs use only the three allowed patterns") {
    for (uint64_t seed = 500; seed < 520; ++seed) {
        Vertex n = 5 + static_cast<Vertex>(seed % 8);
        auto c = sample_almost_gallai(n, seed);
        auto report = nice_quadruples(c);
        CHECK(report.type_counts[0] + report.type_counts[1] + report.type_counts[2] ==
              report.total);
    }
}

TEST_CASE("crossing bound on the hypercube colouring") {
    for (unsigned m = 2; m <= 6; ++m) {
        auto c = hypercube_colouring(m);
        auto layout = hypercube_layout(m);
        std::vector<Vertex> X, Y;
        for (Vertex v = 0; v < layout.left_count(); ++v) X.push_back(v);
        for (unsigned i = 1; i <= m; ++i) Y.push_back(layout.right_vertex(i));
        auto report = check_crossing_bound(c, X, Y, 0);
        CHECK(report.tau == static_cast<uint64_t>(m) * (uint64_t(1) << (m - 1)));
        // (e/2)(d+1)|X| log2 |X| with d = 0
        CHECK(report.bound ==
              doctest::Approx(0.5 * std::exp(1.0) * std::pow(2.0, m) * m));
        CHECK(report.ok);
        // the construction is tight for the bare d=0 bound |X| log|X| / 2
        CHECK(static_cast<double>(report.tau) ==
              doctest::Approx(0.5 * std::pow(2.0, m) * m));
    }
}

TEST_CASE("crossing bound trivial and error cases") {
    CompleteColouring c(5, 3, 0);
    std::vector<Vertex> X = {0}, Y = {1, 2};
    auto r = check_crossing_bound(c, X, Y, 1);
    CHECK(r.tau == 0);
    CHECK(r.ok);

    // vertex 1 has two green edges into X but d = 1
    CompleteColouring g(5, 3, 0);
    g.set_colour(1, 3, kGreen);
    g.set_colour(1, 4, kGreen);
    std::vector<Vertex> X2 = {3, 4}, Y2 = {1};
    CHECK_THROWS_AS(check_crossing_bound(g, X2, Y2, 1), precondition_violation);
    CHECK_NOTHROW(check_crossing_bound(g, X2, Y2, 2));
}

TEST_CASE("crossing bound holds on sampled almost-Gallai instances") {
    for (uint64_t seed = 700; seed < 730; ++seed) {
        Vertex n = 6 + static_cast<Vertex>(seed % 7);
        auto c = sample_almost_gallai(n, seed);
        SplitMix64 rng(seed);
        std::vector<Vertex> X, Y;
        for (Vertex v = 0; v < n; ++v) (rng.next_below(2) ? X : Y).push_back(v);
        if (X.empty() || Y.empty()) continue;
        unsigned d = 0;
        for (Vertex y : Y) {
            unsigned deg = 0;
            for (Vertex x : X)
                if (c.colour(x, y) == kGreen) ++deg;
            d = std::max(d, deg);
        }
        auto report = check_crossing_bound(c, X, Y, d);
        CHECK(report.ok);
    }
}
