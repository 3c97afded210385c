#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gallai/bits.hpp"

namespace gallai {

using Vertex = uint32_t;
using Colour = uint32_t;

// Fixed convention for 3-colourings, used everywhere: 0 = red, 1 = blue,
// 2 = green. Colour names are arbitrary labels; none of the counted
// quantities depend on them.
inline constexpr Colour kRed = 0;
inline constexpr Colour kBlue = 1;
inline constexpr Colour kGreen = 2;

// Edge colouring of K_n with dense colour ids 0..k-1. The colour map is
// symmetric and undefined on the diagonal; storage is a flat triangular
// array indexed by the (min,max) pair for O(1) lookup.
class CompleteColouring {
public:
    CompleteColouring(Vertex n, Colour k, Colour fill = 0)
        : n_(n), k_(k), colour_(static_cast<size_t>(n) * (n - 1) / 2, fill) {
        if (n < 1) throw std::invalid_argument("CompleteColouring: n must be >= 1");
        if (k < 1) throw std::invalid_argument("CompleteColouring: k must be >= 1");
        if (fill >= k) throw std::invalid_argument("CompleteColouring: fill colour out of range");
    }

    Vertex n() const { return n_; }
    Colour k() const { return k_; }
    size_t edge_count() const { return colour_.size(); }

    Colour colour(Vertex u, Vertex v) const { return colour_[pair_index(u, v)]; }

    void set_colour(Vertex u, Vertex v, Colour c) {
        if (c >= k_) throw std::invalid_argument("set_colour: colour id out of range");
        colour_[pair_index(u, v)] = c;
    }

    size_t pair_index(Vertex u, Vertex v) const {
        if (u == v || u >= n_ || v >= n_)
            throw std::invalid_argument("pair_index: need distinct vertices in range");
        if (u > v) std::swap(u, v);
        return static_cast<size_t>(u) * n_ - static_cast<size_t>(u) * (u + 1) / 2 + (v - u - 1);
    }

    // Flat triangular data in (min,max) ascending lexicographic order.
    const std::vector<Colour>& raw() const { return colour_; }

    bool operator==(const CompleteColouring&) const = default;

private:
    Vertex n_;
    Colour k_;
    std::vector<Colour> colour_;
};

// Edge-coloured host graph, not necessarily complete. The colour map is
// defined exactly on present edges; adjacency is irreflexive and symmetric.
class HostColouring {
public:
    static constexpr Colour kNoEdge = 0xffffffffu;

    HostColouring(Vertex n, Colour k)
        : n_(n), k_(k), colour_(static_cast<size_t>(n) * (n - 1) / 2, kNoEdge),
          adj_(n, n) {
        if (n < 1) throw std::invalid_argument("HostColouring: n must be >= 1");
        if (k < 1) throw std::invalid_argument("HostColouring: k must be >= 1");
    }

    Vertex n() const { return n_; }
    Colour k() const { return k_; }
    size_t edge_count() const { return edges_; }

    bool has_edge(Vertex u, Vertex v) const { return colour_[pair_index(u, v)] != kNoEdge; }

    Colour colour(Vertex u, Vertex v) const {
        Colour c = colour_[pair_index(u, v)];
        if (c == kNoEdge) throw std::invalid_argument("colour: edge not present");
        return c;
    }

    // kNoEdge when absent; fast path for enumeration kernels.
    Colour colour_or_noedge(Vertex u, Vertex v) const { return colour_[pair_index(u, v)]; }

    void add_edge(Vertex u, Vertex v, Colour c) {
        if (c >= k_) throw std::invalid_argument("add_edge: colour id out of range");
        size_t idx = pair_index(u, v);
        if (colour_[idx] == kNoEdge) {
            ++edges_;
            adj_.set(u, v);
            adj_.set(v, u);
        }
        colour_[idx] = c;
    }

    const uint64_t* adjacency_row(Vertex v) const { return adj_.row(v); }
    size_t adjacency_words() const { return adj_.words(); }

    size_t pair_index(Vertex u, Vertex v) const {
        if (u == v || u >= n_ || v >= n_)
            throw std::invalid_argument("pair_index: need distinct vertices in range");
        if (u > v) std::swap(u, v);
        return static_cast<size_t>(u) * n_ - static_cast<size_t>(u) * (u + 1) / 2 + (v - u - 1);
    }

private:
    Vertex n_;
    Colour k_;
    size_t edges_ = 0;
    std::vector<Colour> colour_;
    BitMatrix adj_;
};

// Per-colour neighbourhood sizes of one vertex.
struct ColourDegreeProfile {
    Vertex vertex = 0;
    std::vector<uint64_t> degrees; // indexed by colour id
};

} // namespace gallai
