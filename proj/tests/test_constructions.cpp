#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/hypercube_like.hpp"
#include "gallai/rainbow.hpp"
#include "support/oracles.hpp"

using namespace gallai;
using namespace gallai::testing;

TEST_CASE("hypercube colouring m=2 edge by edge") {
    auto c = hypercube_colouring(2);
    REQUIRE(c.n() == 6);
    // vertices: 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1), 4=R1, 5=R2
    struct Row {
        Vertex u, v;
        Colour q;
    };
    const Row expected[] = {
        {0, 1, kGreen}, {0, 2, kGreen}, {0, 3, kRed},  {0, 4, kRed},  {0, 5, kRed},
        {1, 2, kRed},   {1, 3, kGreen}, {1, 4, kBlue}, {1, 5, kRed},  {2, 3, kGreen},
        {2, 4, kRed},   {2, 5, kBlue},  {3, 4, kBlue}, {3, 5, kBlue}, {4, 5, kRed},
    };
    for (auto [u, v, q] : expected) CHECK(c.colour(u, v) == q);
}

TEST_CASE("hypercube colouring counts and the almost-Gallai property") {
    CHECK(enumerate_rainbow_cliques(hypercube_colouring(1), 3).size() == 1);

    for (unsigned m = 1; m <= 6; ++m) {
        auto c = hypercube_colouring(m);
        CHECK(c.n() == (Vertex(1) << m) + m);
        auto set = enumerate_rainbow_cliques(c, 3);
        CHECK(set.size() == static_cast<uint64_t>(m) * (uint64_t(1) << (m - 1)));
        CHECK(set.edge_disjoint);
    }
}

TEST_CASE("every green edge lies in exactly one rainbow triangle, via its coordinate") {
    for (unsigned m = 2; m <= 5; ++m) {
        auto c = hypercube_colouring(m);
        auto layout = hypercube_layout(m);
        auto set = enumerate_rainbow_cliques(c, 3);
        std::map<std::pair<Vertex, Vertex>, std::vector<size_t>> by_green_edge;
        for (size_t i = 0; i < set.size(); ++i) {
            auto tri = set.clique(i);
            for (size_t a = 0; a < 3; ++a)
                for (size_t b = a + 1; b < 3; ++b)
                    if (c.colour(tri[a], tri[b]) == kGreen)
                        by_green_edge[{tri[a], tri[b]}].push_back(i);
        }
        uint64_t greens = 0;
        for (Vertex u = 0; u < layout.left_count(); ++u)
            for (Vertex v = u + 1; v < layout.left_count(); ++v) {
                if (c.colour(u, v) != kGreen) continue;
                ++greens;
                auto it = by_green_edge.find({u, v});
                REQUIRE(it != by_green_edge.end());
                REQUIRE(it->second.size() == 1);
                // the R vertex is the unique differing coordinate
                auto tri = set.clique(it->second[0]);
                Vertex r = tri[2];
                unsigned coord = layout.coordinate(r);
                CHECK((u ^ v) == (Vertex(1) << (coord - 1)));
            }
        CHECK(greens == set.size());
    }
}

TEST_CASE("truncation dimension and the n = 2^m + m case") {
    CHECK(truncation_dimension(3) == 1);
    CHECK(truncation_dimension(4) == 2);
    CHECK(truncation_dimension(6) == 2);
    CHECK(truncation_dimension(7) == 3);
    CHECK(truncation_dimension(11) == 3);
    CHECK(truncation_dimension(12) == 4);

    // at n = 2^m + m the truncation is the full construction
    CHECK(truncated_hypercube_colouring(11) == hypercube_colouring(3));
    CHECK(enumerate_rainbow_cliques(truncated_hypercube_colouring(11), 3).size() == 12);
}

TEST_CASE("truncated colouring rainbow counts") {
    CHECK(enumerate_rainbow_cliques(truncated_hypercube_colouring(10), 3).size() == 9);
    CHECK(enumerate_rainbow_cliques(truncated_hypercube_colouring(3), 3).size() == 1);

    for (Vertex n = 3; n <= 64; ++n) {
        auto c = truncated_hypercube_colouring(n);
        unsigned m = truncation_dimension(n);
        auto set = enumerate_rainbow_cliques(c, 3);
        CHECK(set.edge_disjoint);
        CHECK(set.size() == harper_brute(m, n - m));
        double lower = (static_cast<double>(m) * (n - m) - std::pow(2.0, m)) / 2.0;
        CHECK(static_cast<double>(set.size()) >= lower);
    }
}

TEST_CASE("truncation boundary bound and per-coordinate matchings") {
    for (Vertex n = 3; n <= 80; ++n) {
        unsigned m = truncation_dimension(n);
        uint64_t x = n - m;
        // boundary green edges of the initial segment, by coordinate
        uint64_t boundary = 0;
        for (unsigned i = 0; i < m; ++i) {
            uint64_t ti = 0;
            std::map<uint64_t, int> touched;
            for (uint64_t u = 0; u < x; ++u) {
                uint64_t v = u ^ (uint64_t(1) << i);
                if (v >= x && v < (uint64_t(1) << m)) {
                    ++ti;
                    CHECK(++touched[u] == 1); // T_i is a matching
                }
            }
            CHECK(ti <= (uint64_t(1) << i));
            boundary += ti;
        }
        CHECK(boundary <= (uint64_t(1) << m) - 1);
    }
}

TEST_CASE("hypercube guards") {
    CHECK_THROWS_AS(hypercube_colouring(0), std::invalid_argument);
    CHECK_THROWS_AS(hypercube_colouring(27), size_limit_error);
    CHECK_THROWS_AS(truncated_hypercube_colouring(2), std::invalid_argument);
}

TEST_CASE("gadget colouring on disjoint cliques") {
    auto host = CliqueDecomposedHost::disjoint_cliques(8, 4);
    REQUIRE(host.cliques().size() == 2);
    auto c = gadget_colouring(host, 8);
    CHECK(c.k() == 6);
    auto set = enumerate_rainbow_cliques(c, 4);
    CHECK(set.size() == 2);
    CHECK(set.edge_disjoint);
    CHECK(is_almost_gallai(c, 4).almost_gallai);
}

TEST_CASE("gadget colouring pattern on a single K_4") {
    auto host = CliqueDecomposedHost(4, 4, {{0, 1, 2, 3}});
    auto c = gadget_colouring(host, 4);
    CHECK(c.colour(0, 1) == 0);
    CHECK(c.colour(0, 2) == 1);
    CHECK(c.colour(0, 3) == 2);
    CHECK(c.colour(1, 2) == 3);
    CHECK(c.colour(1, 3) == 4);
    CHECK(c.colour(2, 3) == 5);
    CHECK(enumerate_rainbow_cliques(c, 4).size() == 1);
}

TEST_CASE("gadget colouring of the empty host is monochromatic") {
    auto host = CliqueDecomposedHost(5, 4, {});
    auto c = gadget_colouring(host, 5);
    for (Vertex u = 0; u + 1 < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) CHECK(c.colour(u, v) == 0);
    CHECK(enumerate_rainbow_cliques(c, 4).size() == 0);
}

TEST_CASE("gadget colouring on vertex-sharing edge-disjoint cliques") {
    // two K_4s meeting in one vertex: still a valid decomposition
    auto host = CliqueDecomposedHost(7, 4, {{0, 1, 2, 3}, {3, 4, 5, 6}});
    auto report = verify_gadget_properties(host);
    CHECK(report.property2);
    CHECK(report.property3);
    auto c = gadget_colouring(host, 7);
    auto set = enumerate_rainbow_cliques(c, 4);
    CHECK(set.size() == 2);
    CHECK(set.edge_disjoint);
    CHECK(is_almost_gallai(c, 4).almost_gallai);
}

TEST_CASE("gadget colouring rejects overlapping cliques") {
    auto host = CliqueDecomposedHost(6, 4, {{0, 1, 2, 3}, {0, 1, 4, 5}});
    CHECK_THROWS_AS(gadget_colouring(host, 6), precondition_violation);
}

TEST_CASE("gadget property verification") {
    auto good = verify_gadget_properties(CliqueDecomposedHost::disjoint_cliques(12, 4));
    CHECK(good.property2);
    CHECK(good.property3);
    CHECK(good.clique_count == 3);

    auto shared = verify_gadget_properties(CliqueDecomposedHost(6, 4, {{0, 1, 2, 3}, {0, 1, 4, 5}}));
    CHECK_FALSE(shared.property2);

    // triangle (0,1,3) made of edges from three different cliques
    auto naked = verify_gadget_properties(
        CliqueDecomposedHost(6, 3, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}}));
    CHECK(naked.property2);
    CHECK_FALSE(naked.property3);
}

TEST_CASE("sharp tripartite colouring") {
    auto c7 = sharp_tripartite_colouring(7);
    auto counts7 = count_monochromatic_triangles(c7);
    CHECK(counts7.red == 3);
    CHECK(counts7.blue == 0);
    CHECK(is_good(c7).good);

    CHECK(count_monochromatic_triangles(sharp_tripartite_colouring(3)).red == 1);
    CHECK(count_monochromatic_triangles(sharp_tripartite_colouring(4)).red == 1);

    for (Vertex n = 3; n <= 50; ++n) {
        auto c = sharp_tripartite_colouring(n);
        CHECK(c.part_size(1) == 1);
        int diff = static_cast<int>(c.part_size(2)) - static_cast<int>(c.part_size(3));
        CHECK(std::abs(diff) <= 1);
        auto counts = count_monochromatic_triangles(c);
        CHECK(counts.red == (n - 1) / 2);
        CHECK(counts.blue == 0);
        CHECK(is_good(c).good);
    }
    CHECK_THROWS_AS(sharp_tripartite_colouring(2), std::invalid_argument);
}

TEST_CASE("greedy 3-AP-free sets") {
    CHECK(greedy_ap3_free(1).elements == std::vector<uint64_t>{1});
    CHECK(greedy_ap3_free(2).elements == std::vector<uint64_t>{1, 2});
    CHECK(greedy_ap3_free(9).elements == std::vector<uint64_t>{1, 2, 4, 5});
    for (uint64_t N : {5, 20, 50, 200}) {
        auto s = greedy_ap3_free(N);
        CHECK_FALSE(find_ap3(s.elements).has_value());
    }
    CHECK(find_ap3({1, 2, 3}).has_value());
    CHECK(find_ap3({3, 7, 11}) == std::array<uint64_t, 3>{3, 7, 11});
}

TEST_CASE("Ruzsa-Szemeredi host") {
    auto one = ruzsa_szemeredi_host(1, ApFreeSet{1, {1}});
    CHECK(one.triangles.size() == 1);
    CHECK(one.host.edge_count() == 3);
    CHECK(one.triangles.edge_disjoint);

    auto small = ruzsa_szemeredi_host(3, ApFreeSet{3, {1, 2}});
    CHECK(small.triangles.size() == 6);
    CHECK(small.host.edge_count() == 18);
    CHECK(small.triangles.edge_disjoint);

    auto big = ruzsa_szemeredi_host(9, greedy_ap3_free(9));
    CHECK(big.triangles.size() == 36);
    CHECK(big.triangles.edge_disjoint);
    CHECK(is_almost_gallai(big.host, 3).almost_gallai);

    // every edge lies in exactly one triangle (count edge uses over all
    // triangles of the host; the enumeration returns all of them)
    for (auto& rsz : {std::ref(small), std::ref(big)}) {
        std::map<std::pair<Vertex, Vertex>, int> uses;
        auto& tris = rsz.get().triangles;
        for (size_t i = 0; i < tris.size(); ++i) {
            auto tri = tris.clique(i);
            for (size_t a = 0; a < 3; ++a)
                for (size_t b = a + 1; b < 3; ++b) ++uses[{tri[a], tri[b]}];
        }
        CHECK(uses.size() == rsz.get().host.edge_count());
        for (auto& [edge, count] : uses) CHECK(count == 1);
    }

    CHECK_THROWS_AS(ruzsa_szemeredi_host(3, ApFreeSet{3, {1, 2, 3}}), precondition_violation);
}
