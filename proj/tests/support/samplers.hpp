#pragma once

// Random instance generators shared by the property and acceptance suites.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gallai/colouring.hpp"
#include "gallai/constructions.hpp"
#include "gallai/hypercube_like.hpp"
#include "gallai/rainbow.hpp"
#include "gallai/rng.hpp"

namespace gallai::testing {

// Rejection sampler for almost Gallai 3-colourings. Uniform proposals almost
// never satisfy the constraint beyond tiny n, so the proposals mix a skewed
// per-edge distribution (one dominant colour) with noisy truncated-hypercube
// restrictions; every returned instance is verified almost Gallai, rejected
// and redrawn otherwise.
inline CompleteColouring sample_almost_gallai(Vertex n, uint64_t seed,
                                              unsigned max_attempts = 50000) {
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        SplitMix64 rng = derive_stream(seed, attempt);
        CompleteColouring c(n, 3, 0);
        if (rng.next_below(2) == 0) {
            // dominant colour plus epsilon-noise
            Colour domin = static_cast<Colour>(rng.next_below(3));
            double eps = (0.5 + 2.5 * rng.next_double()) / static_cast<double>(n);
            for (Vertex u = 0; u + 1 < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    c.set_colour(u, v, rng.next_bernoulli(eps)
                                           ? static_cast<Colour>(rng.next_below(3))
                                           : domin);
        } else {
            // restriction of the truncated hypercube colouring to a random
            // vertex subset, then a few random recolourings
            Vertex big = n + 2 + static_cast<Vertex>(rng.next_below(5));
            auto base = truncated_hypercube_colouring(big);
            std::vector<Vertex> verts(big);
            for (Vertex v = 0; v < big; ++v) verts[v] = v;
            for (Vertex v = big; v > 1; --v)
                std::swap(verts[v - 1], verts[rng.next_below(v)]);
            verts.resize(n);
            for (Vertex u = 0; u + 1 < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    c.set_colour(u, v, base.colour(verts[u], verts[v]));
            uint64_t flips = rng.next_below(3);
            for (uint64_t f = 0; f < flips; ++f) {
                Vertex u = static_cast<Vertex>(rng.next_below(n));
                Vertex v = static_cast<Vertex>(rng.next_below(n));
                if (u != v) c.set_colour(u, v, static_cast<Colour>(rng.next_below(3)));
            }
        }
        if (is_almost_gallai(c, 3).almost_gallai) return c;
    }
    throw std::runtime_error("sample_almost_gallai: no accepted instance within the attempt cap");
}

// Random hypercube-like graph: labels drawn uniformly from 2^y subsets, then
// a random partial matching between every Hamming-adjacent cell pair. Valid
// by construction.
inline HypercubeLikeGraph random_hypercube_like(unsigned y, Vertex vertices, SplitMix64& rng) {
    HypercubeLikeGraph g;
    g.y = y;
    g.label.resize(vertices);
    for (Vertex v = 0; v < vertices; ++v) g.label[v] = rng.next_below(uint64_t(1) << y);

    std::vector<std::vector<Vertex>> cell(uint64_t(1) << y);
    for (Vertex v = 0; v < vertices; ++v) cell[g.label[v]].push_back(v);

    for (uint64_t s = 0; s < (uint64_t(1) << y); ++s)
        for (unsigned i = 0; i < y; ++i) {
            uint64_t tcell = s ^ (uint64_t(1) << i);
            if (tcell < s) continue;
            auto& a = cell[s];
            auto& b = cell[tcell];
            if (a.empty() || b.empty()) continue;
            // random partial matching: shuffle both sides, keep a random prefix
            std::vector<Vertex> left = a, right = b;
            for (size_t j = left.size(); j > 1; --j)
                std::swap(left[j - 1], left[rng.next_below(j)]);
            for (size_t j = right.size(); j > 1; --j)
                std::swap(right[j - 1], right[rng.next_below(j)]);
            size_t limit = std::min(left.size(), right.size());
            size_t keep = rng.next_below(limit + 1);
            for (size_t j = 0; j < keep; ++j) {
                Vertex u = left[j], w = right[j];
                if (u > w) std::swap(u, w);
                g.edges.emplace_back(u, w);
            }
        }
    return g;
}

} // namespace gallai::testing
