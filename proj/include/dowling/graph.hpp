#ifndef DOWLING_GRAPH_HPP
#define DOWLING_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dowling/int.hpp"

namespace dowling {

// Subset of the vertices 1..n of some graph, as a bitmask (bit v-1 <-> v).
// Everything here assumes n <= 32.
struct VertexSet {
    std::uint32_t bits = 0;

    static VertexSet all(int n) {
        return {n == 32 ? ~0u : ((1u << n) - 1u)};
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits >> (v - 1)) & 1u; }
    VertexSet& add(int v) {
        bits |= 1u << (v - 1);
        return *this;
    }
    VertexSet& remove(int v) {
        bits &= ~(1u << (v - 1));
        return *this;
    }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    VertexSet complement_in(int n) const { return {all(n).bits & ~bits}; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string str() const;  // "{1,3}"

    bool operator==(const VertexSet&) const = default;
};

// Simple base graph: vertices 1..n, edge set of unordered pairs.
// No loops, no parallel edges; edges are normalized to u < v and sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;  // order-0 graph, only produced by vertex deletion
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    VertexSet vertices() const { return VertexSet::all(n_); }

    bool adjacent(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> (v - 1)) & 1u; }
    std::uint32_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

    // Compact byte key identifying the labeled graph; used as a memo key.
    std::string canonical_key() const;

    std::string str() const;  // "n=3; 1-2,2-3"

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint32_t> adj_;  // index 0 unused
};

SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int edges);  // P<k> = path with k edges on k+1 vertices
SimpleGraph cycle_graph(int n);     // n >= 3
SimpleGraph edgeless_graph(int n);

// Accepts "K<n>", "P<k>", "C<n>", "E<n>" or the explicit "n=<n>; u-v,u-v,...".
SimpleGraph parse_graph(const std::string& spec);

struct Components {
    int count = 0;
    std::vector<VertexSet> blocks;  // ordered by smallest member
};
Components components(const SimpleGraph& g);

// Number of isolated vertices of g outside x.
int zeta(const SimpleGraph& g, VertexSet x);

// All stable subsets of `within` of size <= max_size, including the empty
// set, ordered by size then lexicographically by members.
std::vector<VertexSet> stable_sets(const SimpleGraph& g, VertexSet within, int max_size);

// Number of stable vertex sets of size k; alpha(g, 0) == 1.
long long alpha(const SimpleGraph& g, int k);

struct DeletedGraph {
    SimpleGraph graph;           // induced on V \ y, relabeled 1..n-|y|
    std::vector<int> old_label;  // old_label[new - 1] = original vertex
};
DeletedGraph delete_vertices(const SimpleGraph& g, VertexSet y);

struct GraphStats {
    int edge_count = 0;
    int triangles = 0;
    std::vector<int> degrees;            // degrees[v - 1]
    int complement_edges_avoiding_x = 0; // |E(g^c restricted to V \ x)|
    int x_size = 0;
};
GraphStats graph_stats(const SimpleGraph& g, VertexSet x);

// Every labeled simple graph on exactly n vertices, in edge-mask order.
std::vector<SimpleGraph> all_labeled_graphs(int n);

}  // namespace dowling

#endif
