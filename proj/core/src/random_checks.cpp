#include "gallai/random_checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gallai/counting.hpp"
#include "gallai/errors.hpp"
#include "gallai/rainbow.hpp"
#include "gallai/rng.hpp"

namespace gallai {

namespace {

// mean / stderr / z bookkeeping shared by the checks
TrialSummary summarize(uint64_t trials, double sum, double sum_sq, double target,
                       std::string provenance, uint64_t seed) {
    TrialSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    summary.target = target;
    summary.target_provenance = std::move(provenance);
    summary.mean = sum / static_cast<double>(trials);
    if (trials > 1) {
        double var = (sum_sq - sum * summary.mean) / static_cast<double>(trials - 1);
        if (var < 0) var = 0;
        summary.std_error = std::sqrt(var / static_cast<double>(trials));
    }
    if (summary.std_error > 0)
        summary.z_score = (summary.mean - summary.target) / summary.std_error;
    return summary;
}

void draw_projection(SplitMix64& rng, Colour k, std::vector<Colour>& f) {
    f.resize(k);
    for (Colour i = 0; i < k; ++i) f[i] = static_cast<Colour>(rng.next_below(3));
}

} // namespace

CompleteColouring project_to_3_colours(const CompleteColouring& c, uint64_t seed) {
    SplitMix64 rng = derive_stream(seed, 0);
    std::vector<Colour> f;
    draw_projection(rng, c.k(), f);
    CompleteColouring out(c.n(), 3, 0);
    for (Vertex u = 0; u + 1 < c.n(); ++u)
        for (Vertex v = u + 1; v < c.n(); ++v) out.set_colour(u, v, f[c.colour(u, v)]);
    return out;
}

TrialSummary retention_check_3colour(const CompleteColouring& c, uint64_t trials, uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("retention_check_3colour: trials must be >= 1");
    auto base = enumerate_rainbow_cliques(c, 3);
    if (!base.edge_disjoint)
        throw precondition_violation("retention_check_3colour: input not almost Gallai",
                                     "two rainbow triangles share an edge");
    double rho = static_cast<double>(base.size());

    double sum = 0, sum_sq = 0;
    std::vector<Colour> f;
    CompleteColouring projected(c.n(), 3, 0);
    for (uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = derive_stream(seed, trial);
        draw_projection(rng, c.k(), f);
        for (Vertex u = 0; u + 1 < c.n(); ++u)
            for (Vertex v = u + 1; v < c.n(); ++v) projected.set_colour(u, v, f[c.colour(u, v)]);
        auto set = enumerate_rainbow_cliques(projected, 3);
        if (!set.edge_disjoint)
            throw std::logic_error("retention_check_3colour: projection broke the almost-Gallai property");
        double x = static_cast<double>(set.size());
        sum += x;
        sum_sq += x * x;
    }
    return summarize(trials, sum, sum_sq, 2.0 * rho / 9.0, "2*rho/9", seed);
}

TrialSummary tpartite_retention_check(const CompleteColouring& c, unsigned t, uint64_t trials,
                                      uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("tpartite_retention_check: trials must be >= 1");
    if (t < 3) throw std::invalid_argument("tpartite_retention_check: t must be >= 3");
    auto base = enumerate_rainbow_cliques(c, t);
    if (!base.edge_disjoint)
        throw precondition_violation("tpartite_retention_check: input not almost t-Gallai",
                                     "two rainbow cliques share an edge");

    const Vertex n = c.n();
    const Colour k = c.k();
    const unsigned pairs = t * (t - 1) / 2;
    // colour-class pair ids: (i,j), i<j, indexed lexicographically
    std::vector<std::vector<unsigned>> pair_id(t, std::vector<unsigned>(t, 0));
    {
        unsigned next = 0;
        for (unsigned i = 0; i < t; ++i)
            for (unsigned j = i + 1; j < t; ++j) pair_id[i][j] = pair_id[j][i] = next++;
    }

    double sum = 0, sum_sq = 0;
    std::vector<unsigned> part(n);
    std::vector<unsigned> colour_class(k);
    std::vector<Vertex> clique(t);

    for (uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = derive_stream(seed, trial);
        for (Vertex v = 0; v < n; ++v) part[v] = static_cast<unsigned>(rng.next_below(t));
        for (Colour q = 0; q < k; ++q) colour_class[q] = static_cast<unsigned>(rng.next_below(pairs));

        // count t-cliques of the random subgraph G: edge (u,v) kept iff its
        // endpoints lie in distinct parts and its colour class matches
        auto edge_kept = [&](Vertex u, Vertex v) {
            if (part[u] == part[v]) return false;
            return colour_class[c.colour(u, v)] == pair_id[part[u]][part[v]];
        };
        uint64_t survivors = 0;
        std::vector<Colour> seen;
        // recursive extension over kept edges
        auto count = [&](auto&& self, unsigned depth, Vertex start) -> void {
            if (depth == t) {
                ++survivors;
                // every t-clique of G must be rainbow in c
                seen.clear();
                for (unsigned a = 0; a < t; ++a)
                    for (unsigned b = a + 1; b < t; ++b) {
                        Colour q = c.colour(clique[a], clique[b]);
                        if (std::find(seen.begin(), seen.end(), q) != seen.end())
                            throw std::logic_error(
                                "tpartite_retention_check: surviving clique is not rainbow");
                        seen.push_back(q);
                    }
                return;
            }
            for (Vertex w = start; w < n; ++w) {
                if (n - w < t - depth) break;
                bool ok = true;
                for (unsigned i = 0; i < depth; ++i)
                    if (!edge_kept(clique[i], w)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    clique[depth] = w;
                    self(self, depth + 1, w + 1);
                }
            }
        };
        count(count, 0, 0);
        double x = static_cast<double>(survivors);
        sum += x;
        sum_sq += x * x;
    }

    double per_clique = 1.0;
    for (unsigned i = 1; i <= t; ++i) per_clique *= static_cast<double>(i) / static_cast<double>(t);
    for (unsigned e = 0; e < pairs; ++e) per_clique /= static_cast<double>(pairs);
    double target = per_clique * static_cast<double>(base.size());
    return summarize(trials, sum, sum_sq, target, "rho_t * t!/t^t / C(t,2)^C(t,2)", seed);
}

TrialSummary thinning_crossing_check(const CompleteColouring& c, std::span<const Vertex> X,
                                    std::span<const Vertex> Y, unsigned d, uint64_t trials,
                                    uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("thinning_crossing_check: trials must be >= 1");
    if (d < 1) throw std::invalid_argument("thinning_crossing_check: d must be >= 1");
    if (c.k() != 3) throw std::invalid_argument("thinning_crossing_check: needs k = 3");
    for (Vertex y : Y) {
        uint64_t deg = 0;
        for (Vertex x : X)
            if (c.colour(x, y) == kGreen) ++deg;
        if (deg > d)
            throw precondition_violation("thinning_crossing_check: green degree above d",
                                         "vertex " + std::to_string(y) + " has green degree " +
                                             std::to_string(deg) + " into X");
    }

    uint64_t tau_full = crossing_rainbow_count(c, X, Y, kGreen);
    double keep = 1.0 / (d + 1);
    double log_x = X.size() <= 1 ? 0.0 : std::log2(static_cast<double>(X.size()));

    double sum = 0, sum_sq = 0;
    std::vector<Vertex> sx, sy;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = derive_stream(seed, trial);
        sx.clear();
        for (Vertex x : X)
            if (rng.next_bernoulli(keep)) sx.push_back(x);
        sy.clear();
        for (Vertex y : Y) {
            bool green_to_sx = false;
            for (Vertex x : sx)
                if (c.colour(x, y) == kGreen) {
                    green_to_sx = true;
                    break;
                }
            if (!green_to_sx) sy.push_back(y);
        }
        uint64_t tau = crossing_rainbow_count(c, sx, sy, kGreen);
        // per-trial d=0 bound: no green edges between S_X and S_Y survive
        double per_trial_bound = 0.5 * static_cast<double>(sx.size()) * log_x;
        if (static_cast<double>(tau) > per_trial_bound + 1e-9)
            throw std::logic_error("thinning_crossing_check: per-trial d=0 bound violated");
        double v = static_cast<double>(tau);
        sum += v;
        sum_sq += v * v;
    }
    double target = static_cast<double>(tau_full) / (std::exp(1.0) * (d + 1) * (d + 1));
    return summarize(trials, sum, sum_sq, target, "tau(X,Y)/(e*(d+1)^2), lower bound", seed);
}

} // namespace gallai
