#include "gallai/rainbow.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "gallai/parallel.hpp"

namespace gallai {

namespace {

// Per-colour neighbourhood bitmaps; row (q*n + v) holds N_q(v).
struct ColourMasks {
    size_t n;
    BitMatrix rows;

    ColourMasks(const CompleteColouring& c) : n(c.n()), rows(static_cast<size_t>(c.k()) * c.n(), c.n()) {
        const auto& raw = c.raw();
        size_t idx = 0;
        for (Vertex u = 0; u + 1 < c.n(); ++u) {
            for (Vertex v = u + 1; v < c.n(); ++v, ++idx) {
                Colour q = raw[idx];
                rows.set(static_cast<size_t>(q) * n + u, v);
                rows.set(static_cast<size_t>(q) * n + v, u);
            }
        }
    }

    const uint64_t* row(Colour q, Vertex v) const { return rows.row(static_cast<size_t>(q) * n + v); }
};

bool use_masks(const CompleteColouring& c, EnumerationStrategy strategy) {
    if (strategy == EnumerationStrategy::plain) return false;
    if (strategy == EnumerationStrategy::masked) return true;
    // Mask build is O(k n^2 / 64); worth it once the cubic plain scan bites.
    if (c.k() > 32) return false;
    auto bits = static_cast<uint64_t>(c.k()) * c.n() * c.n();
    return c.n() >= 96 && bits <= (1ULL << 33);
}

// Rainbow triangles via per-colour masks. For an edge (a,b) of colour q the
// third vertices are exactly those w with colour(a,w), colour(b,w) and q
// pairwise distinct:
//   bad = N_q(a) | N_q(b) | union_c (N_c(a) & N_c(b))
// and we scan ~bad above b so every triangle is reported once, in
// lexicographic order.
void enumerate_triangles_masked(const CompleteColouring& c, std::vector<Vertex>& out) {
    const Vertex n = c.n();
    const Colour k = c.k();
    ColourMasks masks(c);
    const size_t words = masks.rows.words();

    std::vector<std::vector<Vertex>> per_lead(n);
    parallel_chunks(n, [&](size_t lo, size_t hi) {
        std::vector<uint64_t> bad(words);
        for (size_t a = lo; a < hi; ++a) {
            auto& local = per_lead[a];
            for (Vertex b = static_cast<Vertex>(a) + 1; b < n; ++b) {
                Colour q = c.colour(static_cast<Vertex>(a), b);
                const uint64_t* qa = masks.row(q, static_cast<Vertex>(a));
                const uint64_t* qb = masks.row(q, b);
                size_t w0 = (b + 1) / 64;
                if (w0 >= words) continue;
                for (size_t w = w0; w < words; ++w) bad[w] = qa[w] | qb[w];
                for (Colour col = 0; col < k; ++col) {
                    const uint64_t* ra = masks.row(col, static_cast<Vertex>(a));
                    const uint64_t* rb = masks.row(col, b);
                    for (size_t w = w0; w < words; ++w) bad[w] |= ra[w] & rb[w];
                }
                // candidates: vertices in (b, n) not marked bad
                for (size_t w = w0; w < words; ++w) {
                    uint64_t cand = ~bad[w];
                    size_t base = w * 64;
                    if (w == w0 && (b + 1) % 64 != 0)
                        cand &= ~0ULL << ((b + 1) % 64);
                    if (base + 64 > n) cand &= (n % 64 == 0) ? ~0ULL : ((1ULL << (n % 64)) - 1);
                    for_each_bit(cand, base, [&](size_t wv) {
                        local.push_back(static_cast<Vertex>(a));
                        local.push_back(b);
                        local.push_back(static_cast<Vertex>(wv));
                    });
                }
            }
        }
    });
    for (auto& local : per_lead)
        out.insert(out.end(), local.begin(), local.end());
}

void enumerate_triangles_plain(const CompleteColouring& c, std::vector<Vertex>& out) {
    const Vertex n = c.n();
    for (Vertex a = 0; a + 2 < n; ++a)
        for (Vertex b = a + 1; b + 1 < n; ++b) {
            Colour ab = c.colour(a, b);
            for (Vertex w = b + 1; w < n; ++w) {
                Colour aw = c.colour(a, w);
                if (aw == ab) continue;
                Colour bw = c.colour(b, w);
                if (bw == ab || bw == aw) continue;
                out.push_back(a);
                out.push_back(b);
                out.push_back(w);
            }
        }
}

// General t: extend sorted partial cliques, keeping the multiset of used
// colours duplicate-free.
void extend_cliques(const CompleteColouring& c, unsigned t, std::vector<Vertex>& cur,
                    std::vector<Colour>& used, std::vector<Vertex>& out) {
    const Vertex n = c.n();
    Vertex start = cur.empty() ? 0 : cur.back() + 1;
    for (Vertex w = start; w < n; ++w) {
        if (n - w < t - cur.size()) break;
        size_t added = 0;
        bool ok = true;
        for (Vertex v : cur) {
            Colour q = c.colour(v, w);
            if (std::find(used.begin(), used.end(), q) != used.end()) {
                ok = false;
                break;
            }
            used.push_back(q);
            ++added;
        }
        if (ok) {
            cur.push_back(w);
            if (cur.size() == t)
                out.insert(out.end(), cur.begin(), cur.end());
            else
                extend_cliques(c, t, cur, used, out);
            cur.pop_back();
        }
        used.resize(used.size() - added);
    }
}

void extend_cliques_host(const HostColouring& c, unsigned t, std::vector<Vertex>& cur,
                         std::vector<Colour>& used, std::vector<Vertex>& out) {
    const Vertex n = c.n();
    Vertex start = cur.empty() ? 0 : cur.back() + 1;
    for (Vertex w = start; w < n; ++w) {
        if (n - w < t - cur.size()) break;
        size_t added = 0;
        bool ok = true;
        for (Vertex v : cur) {
            Colour q = c.colour_or_noedge(v, w);
            if (q == HostColouring::kNoEdge ||
                std::find(used.begin(), used.end(), q) != used.end()) {
                ok = false;
                break;
            }
            used.push_back(q);
            ++added;
        }
        if (ok) {
            cur.push_back(w);
            if (cur.size() == t)
                out.insert(out.end(), cur.begin(), cur.end());
            else
                extend_cliques_host(c, t, cur, used, out);
            cur.pop_back();
        }
        used.resize(used.size() - added);
    }
}

// Fills edge-disjointness metadata. Cliques arrive in lexicographic order, so
// "first user" of an edge has the smallest index; the reported witness is the
// minimum over (first, second, u, v).
void finish_set(Vertex n, RainbowCliqueSet& set) {
    std::unordered_map<uint64_t, uint32_t> first_user;
    first_user.reserve(set.size() * set.t);
    bool have = false;
    SharingWitness best{};
    for (size_t i = 0; i < set.size(); ++i) {
        auto cl = set.clique(i);
        for (size_t a = 0; a < cl.size(); ++a)
            for (size_t b = a + 1; b < cl.size(); ++b) {
                uint64_t key = static_cast<uint64_t>(cl[a]) * n + cl[b];
                auto [it, inserted] = first_user.try_emplace(key, static_cast<uint32_t>(i));
                if (!inserted) {
                    SharingWitness w{it->second, i, cl[a], cl[b]};
                    auto tup = [](const SharingWitness& s) {
                        return std::make_tuple(s.first_clique, s.second_clique, s.u, s.v);
                    };
                    if (!have || tup(w) < tup(best)) {
                        best = w;
                        have = true;
                    }
                }
            }
    }
    set.edge_disjoint = !have;
    if (have) set.sharing_witness = best;
}

void check_preconditions(Vertex n, unsigned t) {
    if (t < 3) throw std::invalid_argument("enumerate_rainbow_cliques: t must be >= 3");
    if (n < t) throw std::invalid_argument("enumerate_rainbow_cliques: need n >= t");
}

} // namespace

RainbowCliqueSet enumerate_rainbow_cliques(const CompleteColouring& c, unsigned t,
                                           EnumerationStrategy strategy) {
    check_preconditions(c.n(), t);
    RainbowCliqueSet set;
    set.t = t;
    if (t == 3) {
        if (use_masks(c, strategy))
            enumerate_triangles_masked(c, set.flat);
        else
            enumerate_triangles_plain(c, set.flat);
    } else {
        std::vector<Vertex> cur;
        std::vector<Colour> used;
        cur.reserve(t);
        used.reserve(t * (t - 1) / 2);
        extend_cliques(c, t, cur, used, set.flat);
    }
    finish_set(c.n(), set);
    return set;
}

RainbowCliqueSet enumerate_rainbow_cliques(const HostColouring& c, unsigned t) {
    check_preconditions(c.n(), t);
    RainbowCliqueSet set;
    set.t = t;
    std::vector<Vertex> cur;
    std::vector<Colour> used;
    cur.reserve(t);
    used.reserve(t * (t - 1) / 2);
    extend_cliques_host(c, t, cur, used, set.flat);
    finish_set(c.n(), set);
    return set;
}

namespace {
template <typename ColouringT>
GallaiCheck gallai_check_impl(const ColouringT& c, unsigned t) {
    auto set = enumerate_rainbow_cliques(c, t);
    GallaiCheck result;
    result.almost_gallai = set.edge_disjoint;
    if (!set.edge_disjoint) {
        result.witness = set.sharing_witness;
        auto f = set.clique(set.sharing_witness->first_clique);
        auto s = set.clique(set.sharing_witness->second_clique);
        result.first.assign(f.begin(), f.end());
        result.second.assign(s.begin(), s.end());
    }
    return result;
}
} // namespace

GallaiCheck is_almost_gallai(const CompleteColouring& c, unsigned t) { return gallai_check_impl(c, t); }
GallaiCheck is_almost_gallai(const HostColouring& c, unsigned t) { return gallai_check_impl(c, t); }

ColourDegreeProfile colour_degrees(const CompleteColouring& c, Vertex v) {
    if (v >= c.n()) throw std::invalid_argument("colour_degrees: vertex out of range");
    ColourDegreeProfile profile;
    profile.vertex = v;
    profile.degrees.assign(c.k(), 0);
    for (Vertex u = 0; u < c.n(); ++u)
        if (u != v) ++profile.degrees[c.colour(u, v)];
    return profile;
}

uint64_t crossing_rainbow_count(const CompleteColouring& c, std::span<const Vertex> X,
                                std::span<const Vertex> Y, Colour q) {
    std::vector<uint8_t> in_x(c.n(), 0);
    for (Vertex x : X) {
        if (x >= c.n()) throw std::invalid_argument("crossing_rainbow_count: vertex out of range");
        in_x[x] = 1;
    }
    for (Vertex y : Y) {
        if (y >= c.n()) throw std::invalid_argument("crossing_rainbow_count: vertex out of range");
        if (in_x[y]) throw std::invalid_argument("crossing_rainbow_count: X and Y must be disjoint");
    }
    uint64_t count = 0;
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = i + 1; j < X.size(); ++j) {
            if (c.colour(X[i], X[j]) != q) continue;
            for (Vertex y : Y) {
                Colour a = c.colour(y, X[i]);
                Colour b = c.colour(y, X[j]);
                if (a != b && a != q && b != q) ++count;
            }
        }
    return count;
}

SpecialEdges special_edges(const CompleteColouring& c, Vertex v) {
    if (v >= c.n()) throw std::invalid_argument("special_edges: vertex out of range");
    SpecialEdges result;
    std::vector<uint8_t> touched(c.n(), 0);
    for (Vertex x = 0; x + 1 < c.n(); ++x) {
        if (x == v) continue;
        for (Vertex y = x + 1; y < c.n(); ++y) {
            if (y == v) continue;
            if (triangle_is_rainbow(c, v, x, y)) {
                result.edges.emplace_back(x, y);
                if (touched[x] || touched[y]) result.matching = false;
                touched[x] = touched[y] = 1;
            }
        }
    }
    return result;
}

TriangleTypeCounts classify_triangles_wrt_vertex(const CompleteColouring& c, Vertex v) {
    if (c.k() != 3) throw std::invalid_argument("classify_triangles_wrt_vertex: needs k = 3");
    if (v >= c.n()) throw std::invalid_argument("classify_triangles_wrt_vertex: vertex out of range");
    auto set = enumerate_rainbow_cliques(c, 3);
    TriangleTypeCounts counts;
    for (size_t i = 0; i < set.size(); ++i) {
        auto tri = set.clique(i);
        if (tri[0] == v || tri[1] == v || tri[2] == v) {
            ++counts.type1;
            continue;
        }
        Colour qa = c.colour(v, tri[0]);
        Colour qb = c.colour(v, tri[1]);
        Colour qc = c.colour(v, tri[2]);
        if (qa == qb && qb == qc)
            ++counts.inside[qa];
        else if (qa != qb && qb != qc && qa != qc)
            ++counts.type3;
        else
            ++counts.type2;
    }
    return counts;
}

} // namespace gallai
