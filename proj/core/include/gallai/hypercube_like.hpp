#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gallai/colouring.hpp"

namespace gallai {

// Graph with a subset-labelled vertex partition: cells V_S for S subseteq [y]
// (labels stored as bitmasks over y coordinates). In a hypercube-like graph
// every edge joins cells at Hamming distance 1 and each such cell pair
// induces a matching.
struct HypercubeLikeGraph {
    unsigned y = 0;
    std::vector<uint64_t> label;                    // per vertex, bits over [y]
    std::vector<std::pair<Vertex, Vertex>> edges;   // u < v
    std::vector<Vertex> original;                   // optional source-vertex ids (extraction)

    Vertex vertex_count() const { return static_cast<Vertex>(label.size()); }
};

struct HclVerifyResult {
    bool ok = true;
    enum class Violation { none, cell_distance, matching } kind = Violation::none;
    // cell_distance: (u, v) of the bad edge; matching: two edges u-v, u-w
    Vertex u = 0, v = 0, w = 0;
    std::string describe() const;
};

HclVerifyResult verify_hypercube_like(const HypercubeLikeGraph& H);

struct InducedEdgeCount {
    uint64_t edges = 0;
    double bound = 0; // (|A|/2) * log2 |A|, zero for |A| <= 1
};

// Edges induced by A plus the isoperimetric bound; edges <= bound whenever H
// verifies as hypercube-like.
InducedEdgeCount induced_edge_count(const HypercubeLikeGraph& H, std::span<const Vertex> A);

// Exact number of Q_m edges with both endpoints of value < x (Harper initial
// segment). O(log x) via the recursion e(x) = k 2^(k-1) + (x - 2^k) + e(x - 2^k)
// for 2^k <= x < 2^(k+1).
uint64_t harper_initial_segment_edges(unsigned m, uint64_t x);

// For an almost Gallai 3-colouring with no green X-Y edges: labels X by blue
// neighbourhoods in Y and keeps the green edges inside X participating in an
// X,Y-crossing rainbow triangle. The result is hypercube-like of dimension
// |Y| (Y positions index the label bits; vertex i of the output is X[i]).
HypercubeLikeGraph extract_rainbow_green_structure(const CompleteColouring& c,
                                                   std::span<const Vertex> X,
                                                   std::span<const Vertex> Y);

} // namespace gallai
