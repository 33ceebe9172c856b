#include "dowling/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace dowling {

std::string VertexSet::str() const {
    std::string out = "{";
    bool first = true;
    for (int v : members()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0 || n > 32) throw std::invalid_argument("graph order must be in 0..32");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u) + "-" + std::to_string(v));
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n) throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n));
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(static_cast<size_t>(n) + 1, 0u);
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(u)] |= 1u << (v - 1);
        adj_[static_cast<size_t>(v)] |= 1u << (u - 1);
    }
}

std::string SimpleGraph::canonical_key() const {
    std::string key;
    key.reserve(1 + 2 * edges_.size());
    key.push_back(static_cast<char>(n_));
    for (auto [u, v] : edges_) {
        key.push_back(static_cast<char>(u));
        key.push_back(static_cast<char>(v));
    }
    return key;
}

std::string SimpleGraph::str() const {
    std::string out = "n=" + std::to_string(n_) + ";";
    bool first = true;
    for (auto [u, v] : edges_) {
        out += first ? " " : ",";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph path_graph(int edges) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= edges; ++u) e.emplace_back(u, u + 1);
    return SimpleGraph(edges + 1, std::move(e));
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(1, n);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph edgeless_graph(int n) { return SimpleGraph(n, {}); }

namespace {

int parse_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number in graph spec at '" + s.substr(start) + "'");
    return std::stoi(s.substr(start, pos - start));
}

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

SimpleGraph parse_graph(const std::string& spec) {
    try {
        size_t pos = 0;
        skip_ws(spec, pos);
        if (pos >= spec.size()) throw ParseError("empty graph spec");
        const char head = spec[pos];
        if (head == 'K' || head == 'P' || head == 'C' || head == 'E') {
            ++pos;
            const int k = parse_int(spec, pos);
            skip_ws(spec, pos);
            if (pos != spec.size()) throw ParseError("trailing text in graph spec '" + spec + "'");
            switch (head) {
                case 'K':
                    if (k < 1) throw ParseError("K<n> needs n >= 1");
                    return complete_graph(k);
                case 'P': return path_graph(k);
                case 'C': return cycle_graph(k);
                default:
                    if (k < 1) throw ParseError("E<n> needs n >= 1");
                    return edgeless_graph(k);
            }
        }
        if (spec.compare(pos, 2, "n=") != 0) throw ParseError("graph spec must start with K/P/C/E or 'n='");
        pos += 2;
        const int n = parse_int(spec, pos);
        if (n < 1) throw ParseError("graph order must be >= 1");
        std::vector<std::pair<int, int>> edges;
        skip_ws(spec, pos);
        if (pos < spec.size()) {
            if (spec[pos] != ';') throw ParseError("expected ';' after vertex count");
            ++pos;
            skip_ws(spec, pos);
            while (pos < spec.size()) {
                const int u = parse_int(spec, pos);
                skip_ws(spec, pos);
                if (pos >= spec.size() || spec[pos] != '-') throw ParseError("expected '-' in edge");
                ++pos;
                skip_ws(spec, pos);
                const int v = parse_int(spec, pos);
                edges.emplace_back(u, v);
                skip_ws(spec, pos);
                if (pos < spec.size()) {
                    if (spec[pos] != ',') throw ParseError("expected ',' between edges");
                    ++pos;
                    skip_ws(spec, pos);
                }
            }
        }
        return SimpleGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad graph spec: ") + e.what());
    }
}

Components components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    Components out;
    std::uint32_t seen = 0;
    for (int root = 1; root <= n; ++root) {
        if ((seen >> (root - 1)) & 1u) continue;
        std::uint32_t block = 1u << (root - 1);
        std::uint32_t frontier = block;
        while (frontier != 0) {
            std::uint32_t next = 0;
            for (std::uint32_t b = frontier; b != 0; b &= b - 1)
                next |= g.neighbors(std::countr_zero(b) + 1);
            frontier = next & ~block;
            block |= next;
        }
        seen |= block;
        out.blocks.push_back({block});
    }
    out.count = static_cast<int>(out.blocks.size());
    return out;
}

int zeta(const SimpleGraph& g, VertexSet x) {
    int z = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) == 0 && !x.contains(v)) ++z;
    return z;
}

namespace {

void extend_stable(const SimpleGraph& g, std::uint32_t within, int max_size, int min_vertex,
                   std::uint32_t current, int size, std::vector<VertexSet>& out) {
    if (size == max_size) return;
    for (int v = min_vertex; v <= g.vertex_count(); ++v) {
        const std::uint32_t bit = 1u << (v - 1);
        if (!(within & bit)) continue;
        if (g.neighbors(v) & current) continue;  // adjacency pruning
        out.push_back({current | bit});
        extend_stable(g, within, max_size, v + 1, current | bit, size + 1, out);
    }
}

}  // namespace

std::vector<VertexSet> stable_sets(const SimpleGraph& g, VertexSet within, int max_size) {
    // Recursive ascending extension yields lexicographic order per size class.
    std::vector<VertexSet> all;
    all.push_back({0u});
    extend_stable(g, within.bits, max_size, 1, 0u, 0, all);
    std::stable_sort(all.begin(), all.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    return all;
}

long long alpha(const SimpleGraph& g, int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    long long count = 0;
    for (const VertexSet& s : stable_sets(g, g.vertices(), k))
        if (s.size() == k) ++count;
    return count;
}

DeletedGraph delete_vertices(const SimpleGraph& g, VertexSet y) {
    DeletedGraph out;
    std::vector<int> new_label(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (y.contains(v)) continue;
        out.old_label.push_back(v);
        new_label[static_cast<size_t>(v)] = static_cast<int>(out.old_label.size());
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (y.contains(u) || y.contains(v)) continue;
        edges.emplace_back(new_label[static_cast<size_t>(u)], new_label[static_cast<size_t>(v)]);
    }
    out.graph = SimpleGraph(static_cast<int>(out.old_label.size()), std::move(edges));
    return out;
}

GraphStats graph_stats(const SimpleGraph& g, VertexSet x) {
    GraphStats s;
    const int n = g.vertex_count();
    s.edge_count = g.edge_count();
    s.x_size = x.size();
    for (int v = 1; v <= n; ++v) s.degrees.push_back(g.degree(v));
    for (auto [u, v] : g.edges()) {
        const std::uint32_t common = g.neighbors(u) & g.neighbors(v);
        for (std::uint32_t b = common; b != 0; b &= b - 1)
            if (std::countr_zero(b) + 1 > v) ++s.triangles;
    }
    for (int u = 1; u <= n; ++u) {
        if (x.contains(u)) continue;
        for (int v = u + 1; v <= n; ++v)
            if (!x.contains(v) && !g.adjacent(u, v)) ++s.complement_edges_avoiding_x;
    }
    return s;
}

std::vector<SimpleGraph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    std::vector<SimpleGraph> out;
    out.reserve(1ull << slots.size());
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::uint64_t b = mask; b != 0; b &= b - 1) edges.push_back(slots[static_cast<size_t>(std::countr_zero(b))]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

}  // namespace dowling
