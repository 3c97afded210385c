#include "gallai/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gallai/constructions.hpp"
#include "gallai/errors.hpp"
#include "gallai/rainbow.hpp"
#include "gallai/rng.hpp"

namespace gallai {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Edges of K_n in ascending (min,max) lexicographic order.
std::vector<std::pair<Vertex, Vertex>> lex_edges(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return edges;
}

// DFS over edge colourings in assignment order. A clique is decided when its
// lexicographically last edge is assigned; branches that close two
// edge-sharing rainbow cliques are rejected, so only almost-Gallai
// colourings are explored. Colour symmetry is broken canonically: first
// occurrences of colour ids appear in ascending order.
struct TauSearcher {
    Vertex n = 0;
    unsigned t = 3;
    Colour k = 3;
    bool bnb = true;
    uint64_t max_nodes = 0;

    size_t E = 0;
    size_t clique_edges = 0;
    std::vector<std::pair<Vertex, Vertex>> edge_of;
    std::vector<std::vector<std::vector<uint32_t>>> closing; // per edge: cliques as edge-index lists

    std::vector<Colour> col;
    std::vector<uint8_t> used;
    std::vector<uint32_t> trail; // edges marked used, for undo
    uint64_t value = 0;
    bool have_best = false;
    uint64_t best = 0;
    std::vector<Colour> best_col;
    uint64_t nodes = 0;

    void prepare() {
        E = static_cast<size_t>(n) * (n - 1) / 2;
        clique_edges = static_cast<size_t>(t) * (t - 1) / 2;
        edge_of = lex_edges(n);
        std::vector<std::vector<uint32_t>> index(n, std::vector<uint32_t>(n, 0));
        for (size_t e = 0; e < E; ++e) {
            index[edge_of[e].first][edge_of[e].second] = static_cast<uint32_t>(e);
            index[edge_of[e].second][edge_of[e].first] = static_cast<uint32_t>(e);
        }
        closing.assign(E, {});
        std::vector<Vertex> sel(t);
        collect_cliques(sel, 0, 0, index);
        col.assign(E, 0);
        used.assign(E, 0);
    }

    // every t-subset, bucketed at its lex-last edge (second-largest, largest)
    void collect_cliques(std::vector<Vertex>& sel, unsigned depth, Vertex start,
                         const std::vector<std::vector<uint32_t>>& index) {
        if (depth == t) {
            std::vector<uint32_t> edges;
            edges.reserve(clique_edges);
            for (unsigned i = 0; i < t; ++i)
                for (unsigned j = i + 1; j < t; ++j) edges.push_back(index[sel[i]][sel[j]]);
            closing[index[sel[t - 2]][sel[t - 1]]].push_back(std::move(edges));
            return;
        }
        for (Vertex v = start; v < n; ++v) {
            if (static_cast<unsigned>(n - v) < t - depth) break;
            sel[depth] = v;
            collect_cliques(sel, depth + 1, v + 1, index);
        }
    }

    bool clique_is_rainbow(const std::vector<uint32_t>& edges) const {
        uint64_t mask = 0;
        for (uint32_t e : edges) {
            uint64_t bit = uint64_t(1) << col[e];
            if (mask & bit) return false;
            mask |= bit;
        }
        return true;
    }

    // value plus a sound cap on future cliques: each closes at a distinct
    // still-unassigned edge and consumes binom(t,2) unused edges.
    uint64_t upper_bound(size_t e) const {
        uint64_t remaining = E - e - 1;
        uint64_t free_cap = E / clique_edges - value;
        return value + std::min(remaining, free_cap);
    }

    void dfs(size_t e, Colour used_colours) {
        if (e == E) {
            if (!have_best || value > best) {
                have_best = true;
                best = value;
                best_col = col;
            }
            return;
        }
        Colour cmax = std::min<Colour>(k - 1, used_colours);
        Colour cmin = 0;
        // root symmetry: a relabelling of vertices 1..n-1 sorts row 0, so the
        // colours along (0,1),(0,2),... may be forced non-decreasing
        if (bnb && edge_of[e].first == 0 && e > 0) cmin = col[e - 1];
        for (Colour c = cmin; c <= cmax; ++c) {
            ++nodes;
            if (max_nodes && nodes > max_nodes)
                throw size_limit_error("exact_tau: node cap exceeded");
            col[e] = c;
            size_t trail_mark = trail.size();
            uint64_t value_mark = value;
            bool feasible = true;
            for (const auto& cl : closing[e]) {
                if (!clique_is_rainbow(cl)) continue;
                bool conflict = false;
                for (uint32_t ce : cl)
                    if (used[ce]) {
                        conflict = true;
                        break;
                    }
                if (conflict) {
                    feasible = false;
                    break;
                }
                for (uint32_t ce : cl) {
                    used[ce] = 1;
                    trail.push_back(ce);
                }
                ++value;
            }
            if (feasible && (!bnb || !have_best || upper_bound(e) > best))
                dfs(e + 1, std::max<Colour>(used_colours, c + 1));
            for (size_t i = trail_mark; i < trail.size(); ++i) used[trail[i]] = 0;
            trail.resize(trail_mark);
            value = value_mark;
        }
    }
};

} // namespace

TauResult exact_tau(Vertex n, unsigned t, Colour k, SearchMethod method,
                    const SearchLimits& limits) {
    if (t < 3) throw std::invalid_argument("exact_tau: t must be >= 3");
    if (n < t) throw std::invalid_argument("exact_tau: need n >= t");
    if (k < 3) throw std::invalid_argument("exact_tau: k must be >= 3");
    if (k > 64) throw size_limit_error("exact_tau: k > 64 unsupported");
    if (n > limits.max_n) throw size_limit_error("exact_tau: n exceeds the feasibility guard");
    if (method == SearchMethod::heuristic)
        throw std::invalid_argument("exact_tau: use local_search_tau for the heuristic");

    auto start = Clock::now();
    TauSearcher searcher;
    searcher.n = n;
    searcher.t = t;
    searcher.k = k;
    searcher.bnb = method == SearchMethod::branch_and_bound;
    searcher.max_nodes = limits.max_nodes;
    searcher.prepare();
    searcher.dfs(0, 0);

    CompleteColouring witness(n, k, 0);
    for (size_t e = 0; e < searcher.E; ++e)
        witness.set_colour(searcher.edge_of[e].first, searcher.edge_of[e].second,
                           searcher.best_col[e]);

    // certify: the witness must re-verify with exactly the claimed count
    auto set = enumerate_rainbow_cliques(witness, t);
    if (!set.edge_disjoint || set.size() != searcher.best)
        throw std::logic_error("exact_tau: witness failed re-verification");

    return TauResult{searcher.best, std::move(witness),
                     {searcher.nodes, seconds_since(start)}, method};
}

namespace {

// Exhaustive DFS over good 2-colourings of K(n1,n2,n3), tracking the maximum
// total and the per-colour monochromatic maxima. No bound pruning: the
// per-colour maxima need every good leaf, and desk-scale instances are small.
struct GammaSearcher {
    Vertex n1 = 1, n2 = 1, n3 = 1;
    uint64_t max_nodes = 0;

    Vertex n = 0;
    size_t E = 0;
    std::vector<std::pair<Vertex, Vertex>> edge_of;
    std::vector<std::vector<std::array<uint32_t, 3>>> closing;

    std::vector<Colour> col;
    std::vector<uint8_t> used;
    std::vector<uint32_t> trail;
    uint64_t mono[2] = {0, 0};
    uint64_t nodes = 0;

    bool have_best = false;
    uint64_t best = 0;
    std::vector<Colour> best_col;
    uint64_t max_red = 0, max_blue = 0;

    int part_of(Vertex v) const { return v < n1 ? 1 : v < n1 + n2 ? 2 : 3; }

    void prepare() {
        n = n1 + n2 + n3;
        std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
        for (Vertex u = 0; u + 1 < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (part_of(u) != part_of(v)) {
                    index[u][v] = index[v][u] = static_cast<int>(edge_of.size());
                    edge_of.emplace_back(u, v);
                }
        E = edge_of.size();
        closing.assign(E, {});
        for (Vertex a = 0; a < n1; ++a)
            for (Vertex b = n1; b < n1 + n2; ++b)
                for (Vertex c = n1 + n2; c < n; ++c)
                    closing[index[b][c]].push_back({static_cast<uint32_t>(index[a][b]),
                                                    static_cast<uint32_t>(index[a][c]),
                                                    static_cast<uint32_t>(index[b][c])});
        col.assign(E, 0);
        used.assign(E, 0);
    }

    void dfs(size_t e) {
        if (e == E) {
            uint64_t total = mono[0] + mono[1];
            if (!have_best || total > best) {
                have_best = true;
                best = total;
                best_col = col;
            }
            max_red = std::max(max_red, mono[0]);
            max_blue = std::max(max_blue, mono[1]);
            return;
        }
        for (Colour c = 0; c <= 1; ++c) {
            ++nodes;
            if (max_nodes && nodes > max_nodes)
                throw size_limit_error("exact_gamma: node cap exceeded");
            col[e] = c;
            size_t trail_mark = trail.size();
            bool feasible = true;
            size_t accepted = 0;
            for (const auto& tri : closing[e]) {
                if (col[tri[0]] != c || col[tri[1]] != c || col[tri[2]] != c) continue;
                if (used[tri[0]] || used[tri[1]] || used[tri[2]]) {
                    feasible = false;
                    break;
                }
                for (uint32_t te : tri) {
                    used[te] = 1;
                    trail.push_back(te);
                }
                ++accepted;
            }
            mono[c] += accepted;
            if (feasible) dfs(e + 1);
            for (size_t i = trail_mark; i < trail.size(); ++i) used[trail[i]] = 0;
            trail.resize(trail_mark);
            mono[c] -= accepted;
        }
    }
};

} // namespace

GammaResult exact_gamma(Vertex n1, Vertex n2, Vertex n3, const SearchLimits& limits) {
    if (n1 < 1 || n2 < 1 || n3 < 1)
        throw std::invalid_argument("exact_gamma: part sizes must be >= 1");
    if (n1 + n2 + n3 > limits.max_gamma_n)
        throw size_limit_error("exact_gamma: n exceeds the feasibility guard");

    auto start = Clock::now();
    GammaSearcher searcher;
    searcher.n1 = n1;
    searcher.n2 = n2;
    searcher.n3 = n3;
    searcher.max_nodes = limits.max_nodes;
    searcher.prepare();
    searcher.dfs(0);

    TripartiteColouring witness(n1, n2, n3, kRed);
    for (size_t e = 0; e < searcher.E; ++e)
        witness.set_colour(searcher.edge_of[e].first, searcher.edge_of[e].second,
                           searcher.best_col[e]);

    auto counts = count_monochromatic_triangles(witness);
    if (!is_good(witness).good || counts.total() != searcher.best)
        throw std::logic_error("exact_gamma: witness failed re-verification");

    return GammaResult{searcher.best,
                       std::move(witness),
                       {searcher.nodes, seconds_since(start)},
                       SearchMethod::exhaustive,
                       searcher.max_red,
                       searcher.max_blue};
}

namespace {

CompleteColouring with_colour_budget(const CompleteColouring& c, Colour k) {
    CompleteColouring out(c.n(), k, 0);
    for (Vertex u = 0; u + 1 < c.n(); ++u)
        for (Vertex v = u + 1; v < c.n(); ++v) out.set_colour(u, v, c.colour(u, v));
    return out;
}

} // namespace

TauResult local_search_tau(Vertex n, unsigned t, Colour k, uint64_t budget, uint64_t seed) {
    if (t < 3) throw std::invalid_argument("local_search_tau: t must be >= 3");
    if (t > 8) throw size_limit_error("local_search_tau: t > 8 unsupported");
    if (n < t) throw std::invalid_argument("local_search_tau: need n >= t");
    if (k < 1) throw std::invalid_argument("local_search_tau: k must be >= 1");

    auto start = Clock::now();

    // seeded starts: constructive lower bounds plus the monochromatic fallback
    std::vector<CompleteColouring> seeds;
    seeds.emplace_back(n, k, 0);
    if (t == 3 && k >= 3)
        seeds.push_back(with_colour_budget(truncated_hypercube_colouring(n), k));
    if (t >= 4 && k >= t * (t - 1) / 2)
        seeds.push_back(
            with_colour_budget(gadget_colouring(CliqueDecomposedHost::disjoint_cliques(n, t), n), k));

    size_t best_seed = 0;
    uint64_t best_value = 0;
    for (size_t i = 0; i < seeds.size(); ++i) {
        auto s = enumerate_rainbow_cliques(seeds[i], t);
        uint64_t v = s.edge_disjoint ? s.size() : 0;
        if (v > best_value) {
            best_value = v;
            best_seed = i;
        }
    }
    CompleteColouring current = seeds[best_seed];

    // current rainbow cliques; the state stays almost Gallai throughout, so
    // each edge belongs to at most one clique
    std::unordered_map<uint64_t, size_t> edge_owner;
    uint64_t value = 0;
    auto edge_key = [n](Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        return static_cast<uint64_t>(u) * n + v;
    };
    auto rebuild = [&]() {
        auto set = enumerate_rainbow_cliques(current, t);
        if (!set.edge_disjoint)
            throw std::logic_error("local_search_tau: state lost the almost-Gallai property");
        edge_owner.clear();
        for (size_t i = 0; i < set.size(); ++i) {
            auto cl = set.clique(i);
            for (size_t a = 0; a < cl.size(); ++a)
                for (size_t b = a + 1; b < cl.size(); ++b)
                    edge_owner[edge_key(cl[a], cl[b])] = i;
        }
        value = set.size();
    };
    rebuild();

    auto edges = lex_edges(n);
    SplitMix64 rng = derive_stream(seed, 0);
    uint64_t proposals = 0;

    std::vector<Vertex> others;
    std::vector<Vertex> clique(t);
    std::vector<Colour> seen_colours;
    std::vector<uint64_t> claimed;
    std::vector<unsigned> pick(t - 2);

    for (uint64_t step = 0; step < budget; ++step) {
        ++proposals;
        auto [u, v] = edges[rng.next_below(edges.size())];
        Colour cnew = static_cast<Colour>(rng.next_below(k));
        Colour cold = current.colour(u, v);
        if (cnew == cold) continue;

        current.set_colour(u, v, cnew);

        std::optional<size_t> dying;
        if (auto owner_it = edge_owner.find(edge_key(u, v)); owner_it != edge_owner.end())
            dying = owner_it->second;

        // enumerate rainbow t-cliques through (u,v) under the new colour and
        // check they clash neither with surviving cliques nor with each other
        others.clear();
        for (Vertex w = 0; w < n; ++w)
            if (w != u && w != v) others.push_back(w);
        claimed.clear();
        size_t fresh = 0;
        bool feasible = true;

        // iterative combinations over `others` for the t-2 remaining vertices
        const unsigned want = t - 2;
        pick.assign(want, 0);
        for (unsigned i = 0; i < want; ++i) pick[i] = i;
        bool done = others.size() < want;
        while (!done && feasible) {
            clique.clear();
            clique.push_back(u);
            clique.push_back(v);
            for (unsigned i = 0; i < want; ++i) clique.push_back(others[pick[i]]);
            std::sort(clique.begin(), clique.end());

            seen_colours.clear();
            bool rainbow = true;
            for (size_t a = 0; a < clique.size() && rainbow; ++a)
                for (size_t b = a + 1; b < clique.size(); ++b) {
                    Colour q = current.colour(clique[a], clique[b]);
                    if (std::find(seen_colours.begin(), seen_colours.end(), q) !=
                        seen_colours.end()) {
                        rainbow = false;
                        break;
                    }
                    seen_colours.push_back(q);
                }
            if (rainbow) {
                for (size_t a = 0; a < clique.size() && feasible; ++a)
                    for (size_t b = a + 1; b < clique.size(); ++b) {
                        uint64_t key = edge_key(clique[a], clique[b]);
                        auto it = edge_owner.find(key);
                        if ((it != edge_owner.end() && (!dying || it->second != *dying)) ||
                            std::find(claimed.begin(), claimed.end(), key) != claimed.end()) {
                            feasible = false;
                            break;
                        }
                    }
                if (feasible) {
                    for (size_t a = 0; a < clique.size(); ++a)
                        for (size_t b = a + 1; b < clique.size(); ++b)
                            claimed.push_back(edge_key(clique[a], clique[b]));
                    ++fresh;
                }
            }
            // next combination
            unsigned i = want;
            while (i > 0) {
                --i;
                if (pick[i] + (want - i) < others.size()) {
                    ++pick[i];
                    for (unsigned j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
                    break;
                }
                if (i == 0) done = true;
            }
        }

        uint64_t removed = dying ? 1 : 0;
        if (feasible && fresh > removed) {
            rebuild(); // first improvement; accepts are rare, refresh fully
        } else {
            current.set_colour(u, v, cold);
        }
    }

    // certify the final witness
    auto final_set = enumerate_rainbow_cliques(current, t);
    if (!final_set.edge_disjoint)
        throw std::logic_error("local_search_tau: witness failed re-verification");
    return TauResult{final_set.size(), std::move(current),
                     {proposals, seconds_since(start)}, SearchMethod::heuristic};
}

} // namespace gallai
