#include "gallai/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "gallai/errors.hpp"

namespace gallai {

HypercubeLayout hypercube_layout(unsigned m) {
    if (m < 1) throw std::invalid_argument("hypercube_layout: m must be >= 1");
    if (m > 26) throw size_limit_error("hypercube_layout: m > 26 is not supported");
    HypercubeLayout layout;
    layout.m = m;
    layout.n = (Vertex(1) << m) + m;
    return layout;
}

CompleteColouring hypercube_colouring(unsigned m) {
    auto layout = hypercube_layout(m);
    const Vertex lc = layout.left_count();
    CompleteColouring c(layout.n, 3, kRed);
    // edges inside L: green exactly at Hamming distance 1
    for (Vertex u = 0; u < lc; ++u)
        for (unsigned i = 0; i < m; ++i) {
            Vertex v = u ^ (Vertex(1) << i);
            if (v > u) c.set_colour(u, v, kGreen);
        }
    // L-R edges: blue when the coordinate bit is set
    for (Vertex u = 0; u < lc; ++u)
        for (unsigned i = 1; i <= m; ++i)
            if ((u >> (i - 1)) & 1) c.set_colour(u, layout.right_vertex(i), kBlue);
    // R-R edges stay red
    return c;
}

unsigned truncation_dimension(Vertex n) {
    if (n < 3) throw std::invalid_argument("truncation_dimension: n must be >= 3");
    for (unsigned m = 1;; ++m) {
        if ((uint64_t(1) << m) + m >= n) return m;
    }
}

CompleteColouring truncated_hypercube_colouring(Vertex n) {
    if (n < 3) throw std::invalid_argument("truncated_hypercube_colouring: n must be >= 3");
    unsigned m = truncation_dimension(n);
    // vertices 0..n-m-1: binary strings with the smallest values; then R
    const Vertex lc = n - m;
    CompleteColouring c(n, 3, kRed);
    for (Vertex u = 0; u < lc; ++u)
        for (Vertex v = u + 1; v < lc; ++v)
            if (std::popcount(u ^ v) == 1) c.set_colour(u, v, kGreen);
    for (Vertex u = 0; u < lc; ++u)
        for (unsigned i = 1; i <= m; ++i)
            if ((u >> (i - 1)) & 1) c.set_colour(u, lc + i - 1, kBlue);
    return c;
}

CliqueDecomposedHost::CliqueDecomposedHost(Vertex n, unsigned t,
                                           std::vector<std::vector<Vertex>> cliques)
    : n_(n), t_(t), cliques_(std::move(cliques)) {
    if (t < 2) throw std::invalid_argument("CliqueDecomposedHost: t must be >= 2");
    for (const auto& clique : cliques_) {
        if (clique.size() != t)
            throw std::invalid_argument("CliqueDecomposedHost: clique size mismatch");
        for (size_t i = 0; i < clique.size(); ++i) {
            if (clique[i] >= n)
                throw std::invalid_argument("CliqueDecomposedHost: vertex out of range");
            if (i > 0 && clique[i] <= clique[i - 1])
                throw std::invalid_argument("CliqueDecomposedHost: clique vertices must be sorted");
        }
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                edges_.emplace_back(clique[i], clique[j]);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

CliqueDecomposedHost CliqueDecomposedHost::disjoint_cliques(Vertex n, unsigned t) {
    std::vector<std::vector<Vertex>> cliques;
    for (Vertex base = 0; base + t <= n; base += t) {
        std::vector<Vertex> clique(t);
        for (unsigned i = 0; i < t; ++i) clique[i] = base + i;
        cliques.push_back(std::move(clique));
    }
    return CliqueDecomposedHost(n, t, std::move(cliques));
}

bool CliqueDecomposedHost::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

GadgetReport verify_gadget_properties(const CliqueDecomposedHost& host) {
    GadgetReport report;
    report.clique_count = host.cliques().size();

    // property (2): no edge covered twice (the edge set is the clique union,
    // so coverage >= 1 is automatic)
    std::map<std::pair<Vertex, Vertex>, size_t> cover;
    for (size_t ci = 0; ci < host.cliques().size(); ++ci) {
        const auto& clique = host.cliques()[ci];
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) {
                auto& count = cover[{clique[i], clique[j]}];
                if (++count == 2 && report.property2) {
                    report.property2 = false;
                    report.violation = "edge (" + std::to_string(clique[i]) + "," +
                                       std::to_string(clique[j]) + ") lies in two cliques";
                }
            }
    }

    // property (3): every triangle of the graph lies inside a listed clique
    std::vector<std::vector<size_t>> member(host.n()); // vertex -> clique ids, sorted
    for (size_t ci = 0; ci < host.cliques().size(); ++ci)
        for (Vertex v : host.cliques()[ci]) member[v].push_back(ci);

    BitMatrix adj(host.n(), host.n());
    for (auto [u, v] : host.edges()) {
        adj.set(u, v);
        adj.set(v, u);
    }
    auto common_clique = [&](Vertex a, Vertex b, Vertex c) {
        for (size_t ci : member[a]) {
            if (std::binary_search(member[b].begin(), member[b].end(), ci) &&
                std::binary_search(member[c].begin(), member[c].end(), ci))
                return true;
        }
        return false;
    };
    for (auto [u, v] : host.edges()) {
        for (Vertex w = v + 1; w < host.n(); ++w) {
            if (!adj.test(u, w) || !adj.test(v, w)) continue;
            if (!common_clique(u, v, w)) {
                report.property3 = false;
                if (report.violation.empty())
                    report.violation = "triangle (" + std::to_string(u) + "," + std::to_string(v) +
                                       "," + std::to_string(w) + ") lies in no clique";
                return report;
            }
        }
    }
    return report;
}

CompleteColouring gadget_colouring(const CliqueDecomposedHost& host, Vertex n) {
    const unsigned t = host.t();
    for (const auto& clique : host.cliques())
        for (Vertex v : clique)
            if (v >= n)
                throw std::invalid_argument("gadget_colouring: host vertex outside 0..n-1");
    const Colour k = t * (t - 1) / 2;
    CompleteColouring c(n, std::max<Colour>(k, 1), 0);

    std::map<std::pair<Vertex, Vertex>, size_t> owner;
    for (size_t ci = 0; ci < host.cliques().size(); ++ci) {
        const auto& clique = host.cliques()[ci];
        Colour next = 0;
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j, ++next) {
                auto [it, inserted] = owner.try_emplace({clique[i], clique[j]}, ci);
                if (!inserted)
                    throw precondition_violation(
                        "gadget_colouring: edge belongs to two cliques",
                        "edge (" + std::to_string(clique[i]) + "," + std::to_string(clique[j]) +
                            ") in cliques " + std::to_string(it->second) + " and " +
                            std::to_string(ci));
                c.set_colour(clique[i], clique[j], next);
            }
    }
    return c;
}

TripartiteColouring sharp_tripartite_colouring(Vertex n) {
    if (n < 3) throw std::invalid_argument("sharp_tripartite_colouring: n must be >= 3");
    Vertex n2 = (n - 1 + 1) / 2; // ceil((n-1)/2)
    Vertex n3 = (n - 1) / 2;
    TripartiteColouring c(1, n2, n3, kRed);
    // V2-V3 edges blue, except a maximum matching pairing i-th with i-th
    for (Vertex a = 1; a <= n2; ++a)
        for (Vertex b = 1 + n2; b < n; ++b)
            c.set_colour(a, b, kBlue);
    for (Vertex i = 0; i < n3; ++i) c.set_colour(1 + i, 1 + n2 + i, kRed);
    return c;
}

ApFreeSet greedy_ap3_free(uint64_t N) {
    ApFreeSet set;
    set.N = N;
    std::vector<uint8_t> kept(N + 1, 0);
    for (uint64_t x = 1; x <= N; ++x) {
        bool completes = false;
        // x would be the largest element of an AP (a, b, x) with a + x = 2b
        for (uint64_t b : set.elements) {
            if (2 * b <= x) continue;
            uint64_t a = 2 * b - x;
            if (a < b && kept[a]) {
                completes = true;
                break;
            }
        }
        if (!completes) {
            set.elements.push_back(x);
            kept[x] = 1;
        }
    }
    return set;
}

std::optional<std::array<uint64_t, 3>> find_ap3(const std::vector<uint64_t>& elements) {
    std::unordered_set<uint64_t> present(elements.begin(), elements.end());
    std::vector<uint64_t> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j) {
            uint64_t c = 2 * sorted[j] - sorted[i];
            if (c > sorted[j] && present.count(c))
                return std::array<uint64_t, 3>{sorted[i], sorted[j], c};
        }
    return std::nullopt;
}

RuzsaSzemerediHost ruzsa_szemeredi_host(uint64_t N, const ApFreeSet& S) {
    if (N < 1) throw std::invalid_argument("ruzsa_szemeredi_host: N must be >= 1");
    for (uint64_t s : S.elements)
        if (s < 1 || s > N)
            throw std::invalid_argument("ruzsa_szemeredi_host: S must lie in [1..N]");
    if (auto ap = find_ap3(S.elements))
        throw precondition_violation("ruzsa_szemeredi_host: S is not 3-AP-free",
                                     "AP (" + std::to_string((*ap)[0]) + "," +
                                         std::to_string((*ap)[1]) + "," +
                                         std::to_string((*ap)[2]) + ")");

    const Vertex n = static_cast<Vertex>(6 * N);
    HostColouring host(n, 3);
    for (uint64_t x = 1; x <= N; ++x)
        for (uint64_t s : S.elements) {
            Vertex gx = static_cast<Vertex>(x - 1);
            Vertex gy = static_cast<Vertex>(N + (x + s - 1));
            Vertex gz = static_cast<Vertex>(3 * N + (x + 2 * s - 1));
            host.add_edge(gx, gy, 0);
            host.add_edge(gy, gz, 1);
            host.add_edge(gx, gz, 2);
        }
    // 3-AP-freeness makes the constructed triangles the only triangles of the
    // host, so enumerating recovers exactly them, already edge-disjoint.
    auto triangles = enumerate_rainbow_cliques(host, 3);
    return RuzsaSzemerediHost{std::move(host), std::move(triangles)};
}

} // namespace gallai
