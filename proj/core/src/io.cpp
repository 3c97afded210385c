#include "gallai/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gallai {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
    throw std::runtime_error("parse error: " + what);
}

uint64_t read_u64(std::istream& in, const char* what) {
    uint64_t value;
    if (!(in >> value)) parse_error(std::string("expected ") + what);
    return value;
}

} // namespace

std::string to_text(const CompleteColouring& c) {
    std::ostringstream out;
    out << c.n() << ' ' << c.k() << '\n';
    for (Vertex u = 0; u + 1 < c.n(); ++u)
        for (Vertex v = u + 1; v < c.n(); ++v)
            out << u << ' ' << v << ' ' << c.colour(u, v) << '\n';
    return out.str();
}

std::string to_text(const HostColouring& c) {
    std::ostringstream out;
    out << "host\n" << c.n() << ' ' << c.k() << '\n';
    for (Vertex u = 0; u + 1 < c.n(); ++u)
        for (Vertex v = u + 1; v < c.n(); ++v)
            if (c.has_edge(u, v)) out << u << ' ' << v << ' ' << c.colour(u, v) << '\n';
    return out.str();
}

std::string to_text(const HypercubeLikeGraph& g) {
    std::ostringstream out;
    out << g.y << ' ' << g.vertex_count() << ' ' << g.edges.size() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << v << ' ' << g.label[v] << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_text(const CliqueDecomposedHost& host) {
    std::ostringstream out;
    out << host.t() << '\n';
    out << "cliques " << host.cliques().size() << '\n';
    for (const auto& clique : host.cliques()) {
        for (size_t i = 0; i < clique.size(); ++i) out << (i ? " " : "") << clique[i];
        out << '\n';
    }
    return out.str();
}

std::string to_text(const ApFreeSet& s) {
    std::ostringstream out;
    for (uint64_t x : s.elements) out << x << '\n';
    return out.str();
}

std::string to_text(const TripartiteColouring& c) {
    std::ostringstream out;
    out << "tripartite " << c.part_size(1) << ' ' << c.part_size(2) << ' ' << c.part_size(3)
        << '\n';
    for (Vertex u = 0; u + 1 < c.n(); ++u)
        for (Vertex v = u + 1; v < c.n(); ++v)
            if (c.has_edge(u, v)) out << u << ' ' << v << ' ' << c.colour(u, v) << '\n';
    return out.str();
}

CompleteColouring complete_colouring_from_text(std::istream& in) {
    uint64_t n = read_u64(in, "vertex count");
    uint64_t k = read_u64(in, "colour count");
    if (n < 1 || n > 0xffffffffULL) parse_error("vertex count out of range");
    if (k < 1 || k > 0xffffffffULL) parse_error("colour count out of range");
    CompleteColouring c(static_cast<Vertex>(n), static_cast<Colour>(k), 0);
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            uint64_t fu = read_u64(in, "edge endpoint");
            uint64_t fv = read_u64(in, "edge endpoint");
            uint64_t fc = read_u64(in, "edge colour");
            if (fu != u || fv != v) parse_error("edges out of order or missing");
            if (fc >= k) parse_error("colour id out of range");
            c.set_colour(u, v, static_cast<Colour>(fc));
        }
    return c;
}

HostColouring host_colouring_from_text(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "host") parse_error("expected 'host' header");
    uint64_t n = read_u64(in, "vertex count");
    uint64_t k = read_u64(in, "colour count");
    if (n < 1 || n > 0xffffffffULL) parse_error("vertex count out of range");
    if (k < 1 || k > 0xffffffffULL) parse_error("colour count out of range");
    HostColouring c(static_cast<Vertex>(n), static_cast<Colour>(k));
    uint64_t u, prev_u = 0, prev_v = 0;
    bool first = true;
    while (in >> u) {
        uint64_t v = read_u64(in, "edge endpoint");
        uint64_t q = read_u64(in, "edge colour");
        if (u >= n || v >= n || u >= v) parse_error("bad edge endpoints");
        if (q >= k) parse_error("colour id out of range");
        if (!first && (u < prev_u || (u == prev_u && v <= prev_v)))
            parse_error("edges out of order");
        first = false;
        prev_u = u;
        prev_v = v;
        c.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Colour>(q));
    }
    return c;
}

HypercubeLikeGraph labelled_graph_from_text(std::istream& in) {
    uint64_t y = read_u64(in, "dimension");
    uint64_t vcount = read_u64(in, "vertex count");
    uint64_t ecount = read_u64(in, "edge count");
    if (y > 64) parse_error("dimension out of range");
    HypercubeLikeGraph g;
    g.y = static_cast<unsigned>(y);
    g.label.resize(vcount, 0);
    for (uint64_t v = 0; v < vcount; ++v) {
        uint64_t id = read_u64(in, "vertex id");
        uint64_t label = read_u64(in, "label bitmask");
        if (id != v) parse_error("vertex ids out of order");
        if (y < 64 && label >= (uint64_t(1) << y)) parse_error("label outside [y]");
        g.label[v] = label;
    }
    for (uint64_t e = 0; e < ecount; ++e) {
        uint64_t u = read_u64(in, "edge endpoint");
        uint64_t v = read_u64(in, "edge endpoint");
        if (u >= vcount || v >= vcount || u == v) parse_error("bad edge endpoints");
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

CliqueDecomposedHost clique_host_from_text(std::istream& in) {
    uint64_t t = read_u64(in, "clique size");
    std::string tag;
    if (!(in >> tag) || tag != "cliques") parse_error("expected 'cliques C'");
    uint64_t count = read_u64(in, "clique count");
    if (t < 2 || t > 64) parse_error("clique size out of range");
    std::vector<std::vector<Vertex>> cliques;
    Vertex n = 0;
    for (uint64_t i = 0; i < count; ++i) {
        std::vector<Vertex> clique(t);
        for (uint64_t j = 0; j < t; ++j) {
            uint64_t v = read_u64(in, "clique vertex");
            if (v > 0xffffffffULL) parse_error("vertex id out of range");
            clique[j] = static_cast<Vertex>(v);
            n = std::max(n, clique[j] + 1);
        }
        cliques.push_back(std::move(clique));
    }
    return CliqueDecomposedHost(std::max<Vertex>(n, 1), static_cast<unsigned>(t),
                                std::move(cliques));
}

ApFreeSet ap_free_set_from_text(std::istream& in) {
    ApFreeSet s;
    uint64_t x;
    while (in >> x) {
        if (!s.elements.empty() && x <= s.elements.back())
            parse_error("elements must be strictly increasing");
        s.elements.push_back(x);
    }
    s.N = s.elements.empty() ? 0 : s.elements.back();
    return s;
}

TripartiteColouring tripartite_from_text(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "tripartite") parse_error("expected 'tripartite' header");
    uint64_t n1 = read_u64(in, "part size");
    uint64_t n2 = read_u64(in, "part size");
    uint64_t n3 = read_u64(in, "part size");
    TripartiteColouring c(static_cast<Vertex>(n1), static_cast<Vertex>(n2),
                          static_cast<Vertex>(n3), kRed);
    size_t expected = n1 * n2 + n1 * n3 + n2 * n3;
    for (size_t i = 0; i < expected; ++i) {
        uint64_t u = read_u64(in, "edge endpoint");
        uint64_t v = read_u64(in, "edge endpoint");
        uint64_t q = read_u64(in, "edge colour");
        if (q > 1) parse_error("tripartite colours are 0 or 1");
        c.set_colour(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Colour>(q));
    }
    return c;
}

std::pair<bool, std::string> sniff_colouring_kind(std::istream& in) {
    std::string first;
    if (!(in >> first)) parse_error("empty colouring file");
    return {first != "host", first};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace gallai
