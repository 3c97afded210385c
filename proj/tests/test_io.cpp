#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gallai/constructions.hpp"
#include "gallai/io.hpp"
#include "gallai/rainbow.hpp"
#include "support/oracles.hpp"

using namespace gallai;
using namespace gallai::testing;

TEST_CASE("complete colouring text format") {
    CompleteColouring c(3, 3, 0);
    c.set_colour(0, 1, 0);
    c.set_colour(0, 2, 1);
    c.set_colour(1, 2, 2);
    CHECK(to_text(c) == "3 3\n0 1 0\n0 2 1\n1 2 2\n");
}

TEST_CASE("complete colouring round trips byte for byte") {
    SplitMix64 rng(8);
    for (int round = 0; round < 20; ++round) {
        Vertex n = 2 + static_cast<Vertex>(rng.next_below(20));
        Colour k = 1 + static_cast<Colour>(rng.next_below(6));
        auto c = random_complete_colouring(n, k, rng);
        auto text = to_text(c);
        std::istringstream in(text);
        auto back = complete_colouring_from_text(in);
        CHECK(back == c);
        CHECK(to_text(back) == text);
    }
}

TEST_CASE("strict parsing") {
    std::istringstream missing("3 3\n0 1 0\n0 2 1\n");
    CHECK_THROWS(complete_colouring_from_text(missing));
    std::istringstream reordered("3 3\n0 2 1\n0 1 0\n1 2 2\n");
    CHECK_THROWS(complete_colouring_from_text(reordered));
    std::istringstream badcolour("3 2\n0 1 0\n0 2 1\n1 2 2\n");
    CHECK_THROWS(complete_colouring_from_text(badcolour));
}

TEST_CASE("host colouring format and round trip") {
    HostColouring h(5, 3);
    h.add_edge(0, 1, 0);
    h.add_edge(0, 2, 1);
    h.add_edge(1, 2, 2);
    h.add_edge(3, 4, 1);
    auto text = to_text(h);
    CHECK(text == "host\n5 3\n0 1 0\n0 2 1\n1 2 2\n3 4 1\n");
    std::istringstream in(text);
    auto back = host_colouring_from_text(in);
    CHECK(to_text(back) == text);
    CHECK(back.edge_count() == 4);
    CHECK(back.colour(3, 4) == 1);
    CHECK_FALSE(back.has_edge(0, 3));
}

TEST_CASE("host format survives the Ruzsa-Szemeredi construction") {
    auto rsz = ruzsa_szemeredi_host(3, ApFreeSet{3, {1, 2}});
    auto text = to_text(rsz.host);
    std::istringstream in(text);
    auto back = host_colouring_from_text(in);
    CHECK(to_text(back) == text);
    CHECK(enumerate_rainbow_cliques(back, 3).size() == 6);
}

TEST_CASE("labelled graph round trip") {
    HypercubeLikeGraph g;
    g.y = 2;
    g.label = {0, 1, 3};
    g.edges = {{0, 1}, {1, 2}};
    auto text = to_text(g);
    CHECK(text == "2 3 2\n0 0\n1 1\n2 3\n0 1\n1 2\n");
    std::istringstream in(text);
    auto back = labelled_graph_from_text(in);
    CHECK(back.y == 2);
    CHECK(back.label == g.label);
    CHECK(back.edges == g.edges);
    CHECK(to_text(back) == text);
}

TEST_CASE("clique host round trip") {
    auto host = CliqueDecomposedHost::disjoint_cliques(8, 4);
    auto text = to_text(host);
    CHECK(text == "4\ncliques 2\n0 1 2 3\n4 5 6 7\n");
    std::istringstream in(text);
    auto back = clique_host_from_text(in);
    CHECK(back.t() == 4);
    CHECK(back.cliques() == host.cliques());
    CHECK(to_text(back) == text);
}

TEST_CASE("ap-free set round trip") {
    auto s = greedy_ap3_free(9);
    auto text = to_text(s);
    CHECK(text == "1\n2\n4\n5\n");
    std::istringstream in(text);
    auto back = ap_free_set_from_text(in);
    CHECK(back.elements == s.elements);
    CHECK(back.N == 5);
}

TEST_CASE("tripartite round trip") {
    auto c = sharp_tripartite_colouring(7);
    auto text = to_text(c);
    std::istringstream in(text);
    auto back = tripartite_from_text(in);
    CHECK(back == c);
    CHECK(to_text(back) == text);
}

TEST_CASE("kind sniffing") {
    std::istringstream host_file("host\n3 3\n");
    auto [complete1, tok1] = sniff_colouring_kind(host_file);
    CHECK_FALSE(complete1);
    std::istringstream complete_file("6 3\n");
    auto [complete2, tok2] = sniff_colouring_kind(complete_file);
    CHECK(complete2);
    CHECK(tok2 == "6");
}
