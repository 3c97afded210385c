#include "gallai/charfunc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gallai/bits.hpp"
#include "gallai/constructions.hpp"
#include "gallai/hypercube_like.hpp"
#include "gallai/rng.hpp"

namespace gallai {

namespace {

// t-cliques of a graph given as adjacency rows, by candidate-mask extension:
// cand holds the common neighbours of the chosen vertices, above the last one.
uint64_t count_cliques(const BitMatrix& adj, Vertex n, unsigned t) {
    const size_t words = adj.words();
    uint64_t count = 0;
    std::vector<std::vector<uint64_t>> level(t + 1, std::vector<uint64_t>(words, 0));

    // out = cand & N(v) & {w : w > v}
    auto shrink = [&](const uint64_t* cand, size_t v, uint64_t* out) {
        const uint64_t* row = adj.row(v);
        size_t wv = v / 64;
        for (size_t w = 0; w < wv; ++w) out[w] = 0;
        unsigned bit = v % 64;
        uint64_t high = bit == 63 ? 0 : (~0ULL << (bit + 1));
        out[wv] = cand[wv] & row[wv] & high;
        for (size_t w = wv + 1; w < words; ++w) out[w] = cand[w] & row[w];
    };

    auto rec = [&](auto&& self, unsigned depth) -> void {
        const auto& cand = level[depth];
        if (t - depth == 1) {
            for (size_t w = 0; w < words; ++w) count += popcount64(cand[w]);
            return;
        }
        for (size_t w = 0; w < words; ++w)
            for_each_bit(cand[w], w * 64, [&](size_t v) {
                shrink(cand.data(), v, level[depth + 1].data());
                self(self, depth + 1);
            });
    };

    if (t == 0) return 1;
    auto& all = level[0];
    for (Vertex v = 0; v < n; ++v) all[v / 64] |= uint64_t(1) << (v % 64);
    rec(rec, 0);
    return count;
}

BitMatrix sample_graph(Vertex n, double p, SplitMix64& rng) {
    BitMatrix adj(n, n);
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_bernoulli(p)) {
                adj.set(u, v);
                adj.set(v, u);
            }
    return adj;
}

} // namespace

uint64_t sample_clique_count(Vertex n, double p, unsigned t, uint64_t seed) {
    if (t < 1) throw std::invalid_argument("sample_clique_count: t must be >= 1");
    if (n < t) throw std::invalid_argument("sample_clique_count: need n >= t");
    if (p < 0 || p > 1) throw std::invalid_argument("sample_clique_count: p must be in [0,1]");
    SplitMix64 rng = derive_stream(seed, 0);
    auto adj = sample_graph(n, p, rng);
    return count_cliques(adj, n, t);
}

CharFuncEstimate estimate_charfunc(Vertex n, double p, unsigned t, double s, uint64_t trials,
                                   uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("estimate_charfunc: trials must be >= 1");
    if (n < t) throw std::invalid_argument("estimate_charfunc: need n >= t");
    if (p < 0 || p > 1) throw std::invalid_argument("estimate_charfunc: p must be in [0,1]");

    double sum_re = 0, sum_im = 0, sum_re2 = 0, sum_im2 = 0;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = derive_stream(seed, trial);
        auto adj = sample_graph(n, p, rng);
        uint64_t x = count_cliques(adj, n, t);
        double re, im;
        if (s == 0) {
            re = 1.0;
            im = 0.0;
        } else {
            double angle = s * static_cast<double>(x);
            re = std::cos(angle);
            im = std::sin(angle);
        }
        sum_re += re;
        sum_im += im;
        sum_re2 += re * re;
        sum_im2 += im * im;
    }
    double inv = 1.0 / static_cast<double>(trials);
    double mean_re = sum_re * inv;
    double mean_im = sum_im * inv;

    CharFuncEstimate est;
    est.s = s;
    est.n = n;
    est.p = p;
    est.t = t;
    est.trials = trials;
    est.modulus = std::hypot(mean_re, mean_im);
    if (trials > 1) {
        double var_re = (sum_re2 - sum_re * mean_re) / static_cast<double>(trials - 1);
        double var_im = (sum_im2 - sum_im * mean_im) / static_cast<double>(trials - 1);
        if (var_re < 0) var_re = 0;
        if (var_im < 0) var_im = 0;
        est.std_error = std::sqrt((var_re + var_im) * inv);
    }
    return est;
}

BernoulliCharBound bernoulli_char_bound(double p, double t) {
    if (p < 0 || p > 1) throw std::invalid_argument("bernoulli_char_bound: p must be in [0,1]");
    BernoulliCharBound result;
    result.actual = std::hypot(1.0 - p + p * std::cos(t), p * std::sin(t));
    double x = t / (2.0 * std::numbers::pi);
    double dist = std::fabs(x - std::nearbyint(x));
    result.bound = 1.0 - 8.0 * p * (1.0 - p) * dist * dist;
    return result;
}

double rainbow_q(double p, unsigned t) {
    unsigned k = t * (t - 1) / 2 - 1;
    return std::pow(2.0 * p * (1.0 - p), static_cast<double>(k));
}

double rainbow_final_bound(const RainbowBoundInput& input) {
    if (input.p <= 0 || input.p >= 1)
        throw std::invalid_argument("rainbow_final_bound: p must be in (0,1)");
    if (input.t < 3) throw std::invalid_argument("rainbow_final_bound: t must be >= 3");
    if (std::fabs(input.s) > std::numbers::pi + 1e-12)
        throw std::invalid_argument("rainbow_final_bound: s must lie in [-pi, pi]");
    unsigned k = input.t * (input.t - 1) / 2 - 1;
    double q = rainbow_q(input.p, input.t);
    double kq = static_cast<double>(input.k_rb) * q;
    double pi2 = std::numbers::pi * std::numbers::pi;
    double raw = std::exp(-input.p * (1.0 - input.p) * input.s * input.s * kq / pi2) +
                 2.0 * std::exp(-kq / 10.0);
    double root = std::pow(raw, 1.0 / std::pow(2.0, static_cast<double>(k)));
    return std::min(root, 1.0);
}

uint64_t best_known_rainbow_count(Vertex n, unsigned t, std::optional<uint64_t> gadget_count) {
    if (t < 3) throw std::invalid_argument("best_known_rainbow_count: t must be >= 3");
    if (n < t) throw std::invalid_argument("best_known_rainbow_count: need n >= t");
    if (t == 3) {
        // rainbow count of the truncated hypercube colouring: the hypercube
        // edges inside the initial segment of size n - m
        unsigned m = truncation_dimension(n);
        return harper_initial_segment_edges(m, n - m);
    }
    uint64_t base = n / t;
    if (gadget_count && *gadget_count > base) return *gadget_count;
    return base;
}

} // namespace gallai
