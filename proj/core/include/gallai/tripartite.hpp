#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gallai/colouring.hpp"

namespace gallai {

// Red-blue colouring of a complete tripartite graph. Parts are consecutive
// vertex ranges: V1 = [0, n1), V2 = [n1, n1+n2), V3 = [n1+n2, n). Only
// cross-part edges exist; colours are 0 = red, 1 = blue.
class TripartiteColouring {
public:
    TripartiteColouring(Vertex n1, Vertex n2, Vertex n3, Colour fill = kRed)
        : n1_(n1), n2_(n2), n3_(n3),
          colour_(static_cast<size_t>(n()) * (n() - 1) / 2, 0xffffffffu) {
        if (n1 < 1 || n2 < 1 || n3 < 1)
            throw std::invalid_argument("TripartiteColouring: parts must be non-empty");
        for (Vertex u = 0; u + 1 < n(); ++u)
            for (Vertex v = u + 1; v < n(); ++v)
                if (part_of(u) != part_of(v)) colour_[pair_index(u, v)] = fill;
    }

    Vertex n() const { return n1_ + n2_ + n3_; }
    Vertex part_size(int i) const { return i == 1 ? n1_ : i == 2 ? n2_ : n3_; }

    int part_of(Vertex v) const {
        if (v < n1_) return 1;
        if (v < n1_ + n2_) return 2;
        if (v < n()) return 3;
        throw std::invalid_argument("part_of: vertex out of range");
    }

    bool has_edge(Vertex u, Vertex v) const { return part_of(u) != part_of(v); }

    Colour colour(Vertex u, Vertex v) const {
        Colour c = colour_[pair_index(u, v)];
        if (c == 0xffffffffu) throw std::invalid_argument("colour: intra-part pair has no edge");
        return c;
    }

    void set_colour(Vertex u, Vertex v, Colour c) {
        if (c > 1) throw std::invalid_argument("set_colour: tripartite colours are 0 (red) or 1 (blue)");
        if (!has_edge(u, v)) throw std::invalid_argument("set_colour: intra-part pair has no edge");
        colour_[pair_index(u, v)] = c;
    }

    bool operator==(const TripartiteColouring&) const = default;

private:
    size_t pair_index(Vertex u, Vertex v) const {
        if (u == v || u >= n() || v >= n())
            throw std::invalid_argument("pair_index: need distinct vertices in range");
        if (u > v) std::swap(u, v);
        return static_cast<size_t>(u) * n() - static_cast<size_t>(u) * (u + 1) / 2 + (v - u - 1);
    }

    Vertex n1_, n2_, n3_;
    std::vector<Colour> colour_;
};

struct MonochromaticCounts {
    uint64_t red = 0;
    uint64_t blue = 0;
    uint64_t total() const { return red + blue; }
};

MonochromaticCounts count_monochromatic_triangles(const TripartiteColouring& c);

// A 2-colouring is good when no two monochromatic triangles share an edge.
struct GoodCheck {
    bool good = true;
    // two triangles (a1,b1,c1), (a2,b2,c2) sharing an edge, when !good
    std::optional<std::pair<std::array<Vertex, 3>, std::array<Vertex, 3>>> witness;
};

GoodCheck is_good(const TripartiteColouring& c);

} // namespace gallai
