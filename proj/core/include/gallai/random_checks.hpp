#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "gallai/colouring.hpp"

namespace gallai {

// Monte-Carlo estimate against an exact target. z_score is
// (mean - target) / std_error when std_error > 0. The seed is recorded so
// every summary replays exactly.
struct TrialSummary {
    uint64_t trials = 0;
    double mean = 0;
    double std_error = 0;
    double target = 0;
    std::string target_provenance;
    double z_score = 0;
    uint64_t seed = 0;
};

// Composes the colouring with a uniformly random map of its colour ids onto
// {red, blue, green}. Rainbow triangles can only disappear, so the output of
// an almost Gallai input is almost Gallai.
CompleteColouring project_to_3_colours(const CompleteColouring& c, uint64_t seed);

// Mean of rho(f o c) over independent random 3-colour projections f, against
// the exact target 2 rho(c) / 9. Asserts the almost-Gallai property of every
// projected colouring.
TrialSummary retention_check_3colour(const CompleteColouring& c, uint64_t trials, uint64_t seed);

// Simulates the random t-partition of the vertices and the random partition
// of the colours into binom(t,2) classes; counts the t-cliques of the kept
// subgraph. Every surviving clique is asserted rainbow in c. Target:
// rho_t(c) * t! / t^t / binom(t,2)^binom(t,2).
TrialSummary tpartite_retention_check(const CompleteColouring& c, unsigned t, uint64_t trials,
                                      uint64_t seed);

// Keeps each x in X with probability 1/(d+1), drops the Y-vertices with a
// green edge into the kept set, and measures the surviving green-crossing
// rainbow triangle count. Each trial asserts the d=0 bound
// tau <= |S_X| log2|X| / 2; the reported target is the expectation lower
// bound tau(X,Y) / (e (d+1)^2), so the acceptance test is one-sided
// (z_score >= -4).
TrialSummary thinning_crossing_check(const CompleteColouring& c, std::span<const Vertex> X,
                                    std::span<const Vertex> Y, unsigned d, uint64_t trials,
                                    uint64_t seed);

} // namespace gallai
