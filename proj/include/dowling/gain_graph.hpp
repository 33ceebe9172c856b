#ifndef DOWLING_GAIN_GRAPH_HPP
#define DOWLING_GAIN_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dowling/graph.hpp"
#include "dowling/group.hpp"

namespace dowling {

// One edge of a group expansion.  Links are stored with u < v and carry the
// gain of the u -> v orientation; traversing v -> u uses the inverse.  Half
// edges have a single endpoint v (u == v, gain unused).
struct GainEdge {
    int u = 0;
    int v = 0;
    int gain = 0;
    bool half = false;

    static GainEdge link(int u, int v, int gain) { return {u, v, gain, false}; }
    static GainEdge half_edge(int v) { return {v, v, 0, true}; }

    bool operator==(const GainEdge&) const = default;
};

// Bitmask over the edge sequence of one GainGraph (bit i <-> edge i).
using EdgeSubset = std::uint64_t;

// Partially filled group expansion of a simple base graph: every base edge
// replaced by one link per group element, plus one half edge at each vertex
// of half_sites.  Immutable after construction.
class GainGraph {
public:
    GainGraph(SimpleGraph base, VertexSet half_sites, FiniteGroup group, std::vector<GainEdge> edges);

    const SimpleGraph& base() const { return base_; }
    VertexSet half_sites() const { return half_sites_; }
    const FiniteGroup& group() const { return group_; }
    int vertex_count() const { return base_.vertex_count(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<GainEdge>& edges() const { return edges_; }
    const GainEdge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

    EdgeSubset full_edge_set() const {
        return edges_.size() == 64 ? ~EdgeSubset(0) : ((EdgeSubset(1) << edges_.size()) - 1);
    }

    std::string str() const;  // e.g. "Z2.(n=3; 1-2,2-3)^{1,2,3}"

private:
    SimpleGraph base_;
    VertexSet half_sites_;
    FiniteGroup group_;
    std::vector<GainEdge> edges_;
};

// Builds the expansion with its deterministic edge order: links grouped by
// base edge with gains ascending, then half edges by vertex.
GainGraph expand(const SimpleGraph& g, VertexSet x, const FiniteGroup& grp);

// Number of balanced components of the spanning subgraph (V, s): a component
// is balanced when it carries no half edge and every circle in it has neutral
// gain.  Decided by breadth-first potential propagation.
int balanced_components(const GainGraph& phi, EdgeSubset s);

// Frame-matroid rank |V| - b(s).
int rank(const GainGraph& phi, EdgeSubset s);

// Labeled union-find over the vertices of one expansion, reused across
// subset sweeps; computes the same b(S) as balanced_components without
// per-subset allocation.
class BalanceSweep {
public:
    explicit BalanceSweep(const GainGraph& phi);
    int b(EdgeSubset s);

private:
    struct FlatEdge {
        int u, v, gain;
        bool half;
    };
    const FiniteGroup group_;
    int n_;
    std::vector<FlatEdge> edges_;
    int parent_[33];
    int size_[33];
    int pot_[33];  // gain from vertex to its parent
    bool unbal_[33];
    int balanced_ = 0;

    int find(int x);  // compresses; afterwards pot_[x] is the gain to the root
    void unbalance(int root);
};

}  // namespace dowling

#endif
