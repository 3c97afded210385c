#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gallai/colouring.hpp"

namespace gallai {

// Two rainbow cliques (by index into the enumeration order) sharing edge uv.
struct SharingWitness {
    size_t first_clique = 0;
    size_t second_clique = 0;
    Vertex u = 0;
    Vertex v = 0;
};

// The rainbow t-cliques of a colouring, in ascending lexicographic vertex
// order, plus edge-disjointness metadata. edge_disjoint is true iff no two
// listed cliques share an edge; otherwise sharing_witness holds the
// lexicographically smallest violating (pair, edge).
struct RainbowCliqueSet {
    unsigned t = 3;
    std::vector<Vertex> flat; // size() * t vertex ids
    bool edge_disjoint = true;
    std::optional<SharingWitness> sharing_witness;

    size_t size() const { return t == 0 ? 0 : flat.size() / t; }
    std::span<const Vertex> clique(size_t i) const { return {flat.data() + i * t, t}; }
};

enum class EnumerationStrategy { automatic, plain, masked };

RainbowCliqueSet enumerate_rainbow_cliques(const CompleteColouring& c, unsigned t,
                                           EnumerationStrategy strategy = EnumerationStrategy::automatic);
RainbowCliqueSet enumerate_rainbow_cliques(const HostColouring& c, unsigned t);

struct GallaiCheck {
    bool almost_gallai = true;
    std::optional<SharingWitness> witness;
    // The two offending cliques, populated when almost_gallai is false.
    std::vector<Vertex> first, second;
};

GallaiCheck is_almost_gallai(const CompleteColouring& c, unsigned t);
GallaiCheck is_almost_gallai(const HostColouring& c, unsigned t);

ColourDegreeProfile colour_degrees(const CompleteColouring& c, Vertex v);

// Number of rainbow triangles y x1 x2 with y in Y, x1,x2 in X and the edge
// x1 x2 coloured q. X and Y must be disjoint.
uint64_t crossing_rainbow_count(const CompleteColouring& c, std::span<const Vertex> X,
                                std::span<const Vertex> Y, Colour q);

// Edges not incident to v that form a rainbow triangle with v, plus whether
// they form a matching (always true in an almost Gallai colouring).
struct SpecialEdges {
    std::vector<std::pair<Vertex, Vertex>> edges;
    bool matching = true;
};

SpecialEdges special_edges(const CompleteColouring& c, Vertex v);

// Buckets of the rainbow triangles of a 3-colouring relative to vertex v:
// through v (type 1), fully inside one monochromatic neighbourhood of v
// (inside[q]), two vertices in one neighbourhood (type 2), one in each
// (type 3). The buckets partition all rainbow triangles.
struct TriangleTypeCounts {
    uint64_t type1 = 0, type2 = 0, type3 = 0;
    uint64_t inside[3] = {0, 0, 0};
    uint64_t total() const { return type1 + type2 + type3 + inside[0] + inside[1] + inside[2]; }
};

TriangleTypeCounts classify_triangles_wrt_vertex(const CompleteColouring& c, Vertex v);

inline bool triangle_is_rainbow(const CompleteColouring& c, Vertex a, Vertex b, Vertex w) {
    Colour x = c.colour(a, b), y = c.colour(a, w), z = c.colour(b, w);
    return x != y && x != z && y != z;
}

} // namespace gallai
