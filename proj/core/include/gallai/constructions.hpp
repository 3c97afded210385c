#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallai/colouring.hpp"
#include "gallai/rainbow.hpp"
#include "gallai/tripartite.hpp"

namespace gallai {

// Vertex layout of the hypercube colouring: L holds the 2^m binary strings,
// ordered by their value b(u) = sum 2^(i-1) u_i, followed by R = {1..m}.
struct HypercubeLayout {
    unsigned m = 0;
    Vertex n = 0; // 2^m + m

    Vertex left_count() const { return Vertex(1) << m; }
    Vertex left_vertex(uint64_t b_value) const { return static_cast<Vertex>(b_value); }
    Vertex right_vertex(unsigned i) const { return left_count() + i - 1; } // i in 1..m
    bool is_left(Vertex v) const { return v < left_count(); }
    // coordinate index 1..m of a right vertex
    unsigned coordinate(Vertex v) const { return static_cast<unsigned>(v - left_count()) + 1; }
};

HypercubeLayout hypercube_layout(unsigned m);

// Three-coloured K_{2^m + m}: L-R edges blue/red by the coordinate bit, edges
// inside L green exactly at Hamming distance 1, everything else red. Almost
// 3-Gallai with exactly m 2^(m-1) rainbow triangles.
CompleteColouring hypercube_colouring(unsigned m);

// Smallest m with n <= 2^m + m.
unsigned truncation_dimension(Vertex n);

// Restriction of hypercube_colouring(m) to the first n-m binary strings plus
// all of R, with m = truncation_dimension(n).
CompleteColouring truncated_hypercube_colouring(Vertex n);

// A host graph together with a t-clique decomposition. The edge set is the
// union of the listed cliques; property (2) asks that no edge lies in two
// cliques, property (3) that every triangle of the graph lies inside one of
// them.
class CliqueDecomposedHost {
public:
    CliqueDecomposedHost(Vertex n, unsigned t, std::vector<std::vector<Vertex>> cliques);

    static CliqueDecomposedHost disjoint_cliques(Vertex n, unsigned t); // floor(n/t) disjoint K_t

    Vertex n() const { return n_; }
    unsigned t() const { return t_; }
    const std::vector<std::vector<Vertex>>& cliques() const { return cliques_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; } // sorted, deduped

    bool has_edge(Vertex u, Vertex v) const;

private:
    Vertex n_;
    unsigned t_;
    std::vector<std::vector<Vertex>> cliques_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

struct GadgetReport {
    bool property2 = true; // every edge in exactly one clique
    bool property3 = true; // every triangle inside some clique
    size_t clique_count = 0;
    std::string violation; // printable witness when a property fails
};

GadgetReport verify_gadget_properties(const CliqueDecomposedHost& host);

// Colours each listed clique rainbow with the fixed pattern (the edge between
// the i-th and j-th clique vertex gets the rank of (i,j)), and every other
// edge of K_n with colour 0. Uses binom(t,2) colours. Throws
// precondition_violation if an edge is claimed by two cliques.
CompleteColouring gadget_colouring(const CliqueDecomposedHost& host, Vertex n);

// |V1| = 1, balanced V2/V3; V1-edges red, one maximum matching between V2 and
// V3 red (pairing i-th smallest with i-th smallest), the rest blue. Good,
// with exactly floor((n-1)/2) red triangles and no blue ones.
TripartiteColouring sharp_tripartite_colouring(Vertex n);

struct ApFreeSet {
    uint64_t N = 0;                 // range bound, elements within [1..N]
    std::vector<uint64_t> elements; // sorted
};

// Greedy scan of 1..N keeping x unless it completes a 3-term AP.
ApFreeSet greedy_ap3_free(uint64_t N);

// Empty when S is 3-AP-free, otherwise some violating triple a < b < c with
// a + c = 2b.
std::optional<std::array<uint64_t, 3>> find_ap3(const std::vector<uint64_t>& elements);

struct RuzsaSzemerediHost {
    HostColouring host;           // tripartite on 6N vertices, 3 colours
    RainbowCliqueSet triangles;   // the N * |S| constructed triangles
};

// Tripartite host on X = [1..N], Y = [1..2N], Z = [1..3N] (vertex ids
// 0..N-1, N..3N-1, 3N..6N-1) with one triangle (x, x+s, x+2s) per x in X,
// s in S; X-Y edges colour 0, Y-Z colour 1, X-Z colour 2. Every edge lies in
// exactly one triangle and the colouring is almost 3-Gallai on the host.
RuzsaSzemerediHost ruzsa_szemeredi_host(uint64_t N, const ApFreeSet& S);

} // namespace gallai
