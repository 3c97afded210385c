#include "gallai/counting.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gallai/errors.hpp"
#include "gallai/rainbow.hpp"

namespace gallai {

uint64_t c_rb(const CompleteColouring& c, Vertex v) {
    if (c.k() != 3) throw std::invalid_argument("c_rb: needs k = 3");
    if (v >= c.n()) throw std::invalid_argument("c_rb: vertex out of range");
    uint64_t count = 0;
    // green edges xy with vx red, vy blue (each triangle counted once: the
    // roles of x and y are fixed by the colours at v)
    for (Vertex x = 0; x < c.n(); ++x) {
        if (x == v || c.colour(v, x) != kRed) continue;
        for (Vertex y = 0; y < c.n(); ++y) {
            if (y == v || y == x || c.colour(v, y) != kBlue) continue;
            if (c.colour(x, y) == kGreen) ++count;
        }
    }
    return count;
}

NiceQuadrupleReport nice_quadruples(const CompleteColouring& c) {
    if (c.k() != 3) throw std::invalid_argument("nice_quadruples: needs k = 3");
    NiceQuadrupleReport report;
    const Vertex n = c.n();

    std::vector<std::pair<Vertex, Vertex>> green;
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (c.colour(u, v) == kGreen) green.emplace_back(u, v);

    // direct route: pick the green edge v_R v_B and the green edge v_G u;
    // candidate quadruples have disjoint supports and the right colours at v_G
    for (auto [a, b] : green) {
        for (auto [p, q] : green) {
            for (auto [g, u] : {std::pair{p, q}, std::pair{q, p}}) {
                if (g == a || g == b || u == a || u == b) continue;
                Colour ga = c.colour(g, a);
                Colour gb = c.colour(g, b);
                Vertex vr, vb;
                if (ga == kBlue && gb == kRed) {
                    vr = a;
                    vb = b;
                } else if (ga == kRed && gb == kBlue) {
                    vr = b;
                    vb = a;
                } else {
                    continue;
                }
                ++report.total;
                Colour ur = c.colour(u, vr);
                Colour ub = c.colour(u, vb);
                if (ur == kGreen && ub == kRed)
                    ++report.type_counts[0];
                else if (ur == kBlue && ub == kGreen)
                    ++report.type_counts[1];
                else if (ur == kGreen && ub == kGreen)
                    ++report.type_counts[2];
            }
        }
    }

    // independent route: sum_v d_G(v) c_RB(v)
    for (Vertex v = 0; v < n; ++v) {
        uint64_t dg = 0;
        for (Vertex u = 0; u < n; ++u)
            if (u != v && c.colour(u, v) == kGreen) ++dg;
        if (dg > 0) report.per_vertex_sum += dg * c_rb(c, v);
    }
    return report;
}

CrossingBoundReport check_crossing_bound(const CompleteColouring& c, std::span<const Vertex> X,
                                         std::span<const Vertex> Y, unsigned d) {
    if (c.k() != 3) throw std::invalid_argument("check_crossing_bound: needs k = 3");
    std::vector<uint8_t> in_x(c.n(), 0);
    for (Vertex x : X) {
        if (x >= c.n()) throw std::invalid_argument("check_crossing_bound: vertex out of range");
        in_x[x] = 1;
    }
    for (Vertex y : Y) {
        if (y >= c.n()) throw std::invalid_argument("check_crossing_bound: vertex out of range");
        if (in_x[y]) throw std::invalid_argument("check_crossing_bound: X and Y must be disjoint");
    }
    for (Vertex y : Y) {
        uint64_t deg = 0;
        for (Vertex x : X)
            if (c.colour(x, y) == kGreen) ++deg;
        if (deg > d)
            throw precondition_violation("check_crossing_bound: green degree above d",
                                         "vertex " + std::to_string(y) + " has green degree " +
                                             std::to_string(deg) + " into X");
    }

    CrossingBoundReport report;
    report.tau = crossing_rainbow_count(c, X, Y, kGreen);
    size_t x = X.size();
    report.bound = x <= 1 ? 0.0
                          : 0.5 * std::exp(1.0) * (d + 1) * static_cast<double>(x) *
                                std::log2(static_cast<double>(x));
    // log2 is exact at powers of two; elsewhere allow for rounding
    bool pow2 = x > 0 && (x & (x - 1)) == 0;
    double slack = pow2 ? 0.0 : 1e-9;
    report.ok = static_cast<double>(report.tau) <= report.bound + slack;
    return report;
}

} // namespace gallai
