#include "gallai/hypercube_like.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "gallai/errors.hpp"

namespace gallai {

std::string HclVerifyResult::describe() const {
    switch (kind) {
    case Violation::none:
        return "hypercube-like";
    case Violation::cell_distance:
        return "edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") joins cells at Hamming distance != 1";
    case Violation::matching:
        return "edges (" + std::to_string(u) + "," + std::to_string(v) + ") and (" +
               std::to_string(u) + "," + std::to_string(w) + ") break the cell-pair matching";
    }
    return {};
}

HclVerifyResult verify_hypercube_like(const HypercubeLikeGraph& H) {
    HclVerifyResult result;
    for (auto [u, v] : H.edges) {
        if (u >= H.vertex_count() || v >= H.vertex_count())
            throw std::invalid_argument("verify_hypercube_like: edge endpoint out of range");
        if (std::popcount(H.label[u] ^ H.label[v]) != 1) {
            result.ok = false;
            result.kind = HclVerifyResult::Violation::cell_distance;
            result.u = u;
            result.v = v;
            return result;
        }
    }
    // matching condition: no vertex has two neighbours in the same cell
    std::map<std::pair<Vertex, uint64_t>, Vertex> seen; // (vertex, neighbour cell) -> neighbour
    for (auto [u, v] : H.edges) {
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            auto [it, inserted] = seen.try_emplace({a, H.label[b]}, b);
            if (!inserted) {
                result.ok = false;
                result.kind = HclVerifyResult::Violation::matching;
                result.u = a;
                result.v = it->second;
                result.w = b;
                return result;
            }
        }
    }
    return result;
}

InducedEdgeCount induced_edge_count(const HypercubeLikeGraph& H, std::span<const Vertex> A) {
    std::vector<uint8_t> in(H.vertex_count(), 0);
    for (Vertex v : A) {
        if (v >= H.vertex_count())
            throw std::invalid_argument("induced_edge_count: vertex not in V(H)");
        in[v] = 1;
    }
    InducedEdgeCount result;
    for (auto [u, v] : H.edges)
        if (in[u] && in[v]) ++result.edges;
    size_t x = A.size();
    result.bound = x <= 1 ? 0.0 : 0.5 * static_cast<double>(x) * std::log2(static_cast<double>(x));
    return result;
}

uint64_t harper_initial_segment_edges(unsigned m, uint64_t x) {
    if (m > 62) throw std::invalid_argument("harper_initial_segment_edges: m too large");
    if (x > (uint64_t(1) << m))
        throw std::invalid_argument("harper_initial_segment_edges: x out of range");
    // e(2^k) = k 2^(k-1); the strings above 2^k form an initial segment of a
    // subcube plus one cross edge each down to their bit-cleared twin.
    uint64_t edges = 0;
    while (x > 1) {
        unsigned k = 63 - static_cast<unsigned>(std::countl_zero(x));
        uint64_t pow = uint64_t(1) << k;
        if (x == pow) {
            edges += static_cast<uint64_t>(k) * (pow >> 1);
            return edges;
        }
        edges += static_cast<uint64_t>(k) * (pow >> 1) + (x - pow);
        x -= pow;
    }
    return edges;
}

HypercubeLikeGraph extract_rainbow_green_structure(const CompleteColouring& c,
                                                   std::span<const Vertex> X,
                                                   std::span<const Vertex> Y) {
    if (c.k() != 3)
        throw std::invalid_argument("extract_rainbow_green_structure: needs k = 3");
    if (Y.size() > 64)
        throw size_limit_error("extract_rainbow_green_structure: |Y| > 64 labels unsupported");
    std::vector<uint8_t> in_x(c.n(), 0);
    for (Vertex x : X) {
        if (x >= c.n()) throw std::invalid_argument("extract: vertex out of range");
        in_x[x] = 1;
    }
    for (Vertex y : Y) {
        if (y >= c.n()) throw std::invalid_argument("extract: vertex out of range");
        if (in_x[y]) throw std::invalid_argument("extract: X and Y must be disjoint");
    }
    for (Vertex x : X)
        for (Vertex y : Y)
            if (c.colour(x, y) == kGreen)
                throw precondition_violation(
                    "extract_rainbow_green_structure: green X-Y edge present",
                    "edge (" + std::to_string(x) + "," + std::to_string(y) + ")");

    HypercubeLikeGraph H;
    H.y = static_cast<unsigned>(Y.size());
    H.label.resize(X.size(), 0);
    H.original.assign(X.begin(), X.end());
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = 0; j < Y.size(); ++j)
            if (c.colour(X[i], Y[j]) == kBlue) H.label[i] |= uint64_t(1) << j;

    // keep green edges inside X whose endpoints' blue neighbourhoods in Y
    // differ; those are exactly the edges in some X,Y-crossing rainbow triangle
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = i + 1; j < X.size(); ++j) {
            if (c.colour(X[i], X[j]) != kGreen) continue;
            if (H.label[i] != H.label[j])
                H.edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    return H;
}

} // namespace gallai
