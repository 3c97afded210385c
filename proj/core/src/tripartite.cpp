#include "gallai/tripartite.hpp"

#include <array>
#include <map>

namespace gallai {

namespace {
// Visits every triangle (one vertex per part) with its colour triple.
template <typename Fn>
void for_each_triangle(const TripartiteColouring& c, Fn&& fn) {
    Vertex n1 = c.part_size(1), n2 = c.part_size(2), n3 = c.part_size(3);
    for (Vertex a = 0; a < n1; ++a)
        for (Vertex b = n1; b < n1 + n2; ++b)
            for (Vertex d = n1 + n2; d < n1 + n2 + n3; ++d)
                fn(a, b, d, c.colour(a, b), c.colour(a, d), c.colour(b, d));
}
} // namespace

MonochromaticCounts count_monochromatic_triangles(const TripartiteColouring& c) {
    MonochromaticCounts counts;
    for_each_triangle(c, [&](Vertex, Vertex, Vertex, Colour x, Colour y, Colour z) {
        if (x == y && y == z) {
            if (x == kRed)
                ++counts.red;
            else
                ++counts.blue;
        }
    });
    return counts;
}

GoodCheck is_good(const TripartiteColouring& c) {
    GoodCheck check;
    // first monochromatic triangle seen on each edge
    std::map<std::pair<Vertex, Vertex>, std::array<Vertex, 3>> used;
    for_each_triangle(c, [&](Vertex a, Vertex b, Vertex d, Colour x, Colour y, Colour z) {
        if (!check.good || x != y || y != z) return;
        std::array<Vertex, 3> tri{a, b, d};
        std::array<std::pair<Vertex, Vertex>, 3> edges{{{a, b}, {a, d}, {b, d}}};
        for (auto e : edges) {
            auto [it, inserted] = used.try_emplace(e, tri);
            if (!inserted && it->second != tri) {
                check.good = false;
                check.witness = {it->second, tri};
                return;
            }
        }
    });
    return check;
}

} // namespace gallai
