#pragma once

#include <cstdint>

#include "gallai/colouring.hpp"
#include "gallai/tripartite.hpp"

namespace gallai {

enum class SearchMethod { exhaustive, branch_and_bound, heuristic };

struct SearchStats {
    uint64_t nodes_explored = 0;
    double elapsed_seconds = 0;
};

// Extremal value with a certified witness: the returned colouring re-verifies
// as almost Gallai (resp. good) with exactly `value` rainbow (monochromatic)
// cliques. Heuristic results are lower bounds only.
struct TauResult {
    uint64_t value = 0;
    CompleteColouring witness;
    SearchStats stats;
    SearchMethod method = SearchMethod::branch_and_bound;
};

struct GammaResult {
    uint64_t value = 0;
    TripartiteColouring witness;
    SearchStats stats;
    SearchMethod method = SearchMethod::exhaustive;
    // maxima of the per-colour monochromatic count over all good colourings
    uint64_t max_red = 0;
    uint64_t max_blue = 0;
};

struct SearchLimits {
    Vertex max_n = 8;       // feasibility guard for exact tau search
    Vertex max_gamma_n = 9; // feasibility guard for exact gamma search
    uint64_t max_nodes = 0; // 0 = unlimited; exceeded -> size_limit_error
};

// Maximum number of rainbow t-cliques over almost t-Gallai k-colourings of
// K_n. Exhaustive mode enumerates the feasible space directly (with colour
// relabelling canonicalisation); branch-and-bound adds the packing-cap prune
// and root-row symmetry breaking. Both are exact and return the first
// maximiser in canonical order.
TauResult exact_tau(Vertex n, unsigned t, Colour k,
                    SearchMethod method = SearchMethod::branch_and_bound,
                    const SearchLimits& limits = {});

// Maximum number of monochromatic triangles over good 2-colourings of the
// complete tripartite graph K(n1,n2,n3), plus per-colour maxima.
GammaResult exact_gamma(Vertex n1, Vertex n2, Vertex n3, const SearchLimits& limits = {});

// First-improvement hill climbing over single-edge recolourings, seeded with
// the best known construction. The returned value is a certified lower
// bound: the witness is re-verified before returning.
TauResult local_search_tau(Vertex n, unsigned t, Colour k, uint64_t budget, uint64_t seed);

} // namespace gallai
