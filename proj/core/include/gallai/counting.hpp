#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "gallai/colouring.hpp"

namespace gallai {

// Rainbow triangles vxy with vx red and vy blue (hence xy green).
uint64_t c_rb(const CompleteColouring& c, Vertex v);

// Nice quadruples (v_G, v_R, v_B, u): v_G v_R blue, v_G v_B red, v_R v_B and
// v_G u green. total is enumerated directly; per_vertex_sum is the
// independent route sum_v d_G(v) c_RB(v); the two agree on every 3-colouring.
// type_counts buckets the (u v_R, u v_B) colour patterns (green,red),
// (blue,green), (green,green); for almost Gallai inputs these cover every
// quadruple.
struct NiceQuadrupleReport {
    uint64_t total = 0;
    uint64_t per_vertex_sum = 0;
    std::array<uint64_t, 3> type_counts = {0, 0, 0};
};

NiceQuadrupleReport nice_quadruples(const CompleteColouring& c);

// tau = number of rainbow triangles y x1 x2 with the green edge inside X,
// bound = (e/2)(d+1)|X| log2|X|. Requires |N_G(y) cap X| <= d for all y in Y.
struct CrossingBoundReport {
    uint64_t tau = 0;
    double bound = 0;
    bool ok = true;
};

CrossingBoundReport check_crossing_bound(const CompleteColouring& c, std::span<const Vertex> X,
                                         std::span<const Vertex> Y, unsigned d);

} // namespace gallai
