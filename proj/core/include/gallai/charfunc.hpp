#pragma once

#include <cstdint>
#include <optional>

#include "gallai/colouring.hpp"

namespace gallai {

// |E e^{isX_t}| for the t-clique count X_t of G(n,p), estimated by Monte
// Carlo. modulus(s=0) is exactly 1 with zero error.
struct CharFuncEstimate {
    double s = 0;
    double modulus = 0;
    double std_error = 0;
    uint64_t trials = 0;
    Vertex n = 0;
    double p = 0;
    unsigned t = 3;
};

// One draw of the t-clique count of G(n,p) via independent edge coins.
uint64_t sample_clique_count(Vertex n, double p, unsigned t, uint64_t seed);

CharFuncEstimate estimate_charfunc(Vertex n, double p, unsigned t, double s, uint64_t trials,
                                   uint64_t seed);

// |p e^{it} + (1-p)| against 1 - 8 p (1-p) ||t/2pi||^2, where ||.|| is the
// distance to the nearest integer. actual <= bound for all p in [0,1].
struct BernoulliCharBound {
    double actual = 0;
    double bound = 0;
};

BernoulliCharBound bernoulli_char_bound(double p, double t);

// Inputs of the closed-form characteristic-function bound driven by a
// rainbow t-clique packing of size k_rb: with k = binom(t,2)-1 and
// q = (2p(1-p))^k, the bound on |E e^{isX_t}| is
//   [exp(-p(1-p) s^2 k_rb q / pi^2) + 2 exp(-k_rb q / 10)]^(1/2^k),
// clipped to 1 (the 2^k-th root makes it directly comparable to modulus
// estimates). Valid for s in [-pi, pi].
struct RainbowBoundInput {
    uint64_t k_rb = 0;
    double p = 0.5;
    unsigned t = 3;
    double s = 0;
};

double rainbow_q(double p, unsigned t);
double rainbow_final_bound(const RainbowBoundInput& input);

// Best constructive rainbow t-clique packing at this size: the truncated
// hypercube count for t = 3; floor(n/t) or a loaded gadget host for t >= 4.
uint64_t best_known_rainbow_count(Vertex n, unsigned t,
                                  std::optional<uint64_t> gadget_count = std::nullopt);

} // namespace gallai
