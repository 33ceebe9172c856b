#include "dowling/gain_graph.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace dowling {

GainGraph::GainGraph(SimpleGraph base, VertexSet half_sites, FiniteGroup group, std::vector<GainEdge> edges)
    : base_(std::move(base)), half_sites_(half_sites), group_(std::move(group)), edges_(std::move(edges)) {
    if (!half_sites_.subset_of(base_.vertices()))
        throw std::invalid_argument("half-edge sites must be vertices of the base graph");
    const size_t expected =
        static_cast<size_t>(group_.order()) * base_.edge_count() + static_cast<size_t>(half_sites_.size());
    if (edges_.size() != expected) throw std::invalid_argument("expansion edge count mismatch");
    if (edges_.size() > 63) throw std::invalid_argument("expansion too large for a 64-bit edge bitmask");

    std::set<std::tuple<int, int, int>> links;
    std::set<int> halves;
    for (const GainEdge& e : edges_) {
        if (e.half) {
            if (!half_sites_.contains(e.v) || !halves.insert(e.v).second)
                throw std::invalid_argument("half edges must appear once per site vertex");
        } else {
            if (!(e.u < e.v) || !base_.adjacent(e.u, e.v) || e.gain < 0 || e.gain >= group_.order() ||
                !links.insert({e.u, e.v, e.gain}).second)
                throw std::invalid_argument("links must cover each base edge once per gain, stored u < v");
        }
    }
    if (static_cast<int>(links.size()) != group_.order() * base_.edge_count() ||
        static_cast<int>(halves.size()) != half_sites_.size())
        throw std::invalid_argument("expansion is missing links or half edges");
}

std::string GainGraph::str() const {
    return group_.name() + ".(" + base_.str() + ")^" + half_sites_.str();
}

GainGraph expand(const SimpleGraph& g, VertexSet x, const FiniteGroup& grp) {
    if (!x.subset_of(g.vertices()))
        throw std::invalid_argument("half-edge set must be a subset of the vertices");
    std::vector<GainEdge> edges;
    edges.reserve(static_cast<size_t>(grp.order()) * g.edge_count() + static_cast<size_t>(x.size()));
    for (auto [u, v] : g.edges())
        for (int gain = 0; gain < grp.order(); ++gain) edges.push_back(GainEdge::link(u, v, gain));
    for (int v : x.members()) edges.push_back(GainEdge::half_edge(v));
    return GainGraph(g, x, grp, std::move(edges));
}

namespace {

void check_subset(const GainGraph& phi, EdgeSubset s) {
    if ((s & ~phi.full_edge_set()) != 0)
        throw std::invalid_argument("edge subset has bits beyond the expansion's edges");
}

}  // namespace

int balanced_components(const GainGraph& phi, EdgeSubset s) {
    check_subset(phi, s);
    const FiniteGroup& grp = phi.group();
    const int n = phi.vertex_count();

    // Flatten the subset once; BFS scans this list per popped vertex.
    GainEdge sub[64];
    int m = 0;
    for (EdgeSubset b = s; b != 0; b &= b - 1) sub[m++] = phi.edge(std::countr_zero(b));

    bool visited[33] = {};
    int theta[33] = {};
    int queue[33];
    int balanced = 0;

    for (int root = 1; root <= n; ++root) {
        if (visited[root]) continue;
        bool bal = true;
        int head = 0, tail = 0;
        visited[root] = true;
        theta[root] = FiniteGroup::identity;
        queue[tail++] = root;
        while (head < tail) {
            const int u = queue[head++];
            for (int i = 0; i < m; ++i) {
                const GainEdge& e = sub[i];
                if (e.half) {
                    if (e.v == u) bal = false;
                    continue;
                }
                int w, guw;
                if (e.u == u) {
                    w = e.v;
                    guw = e.gain;
                } else if (e.v == u) {
                    w = e.u;
                    guw = grp.inv(e.gain);
                } else {
                    continue;
                }
                const int expected = grp.mul(theta[u], guw);
                if (!visited[w]) {
                    visited[w] = true;
                    theta[w] = expected;
                    queue[tail++] = w;
                } else if (theta[w] != expected) {
                    bal = false;  // a non-neutral circle closes here
                }
            }
        }
        if (bal) ++balanced;
    }
    return balanced;
}

int rank(const GainGraph& phi, EdgeSubset s) { return phi.vertex_count() - balanced_components(phi, s); }

BalanceSweep::BalanceSweep(const GainGraph& phi) : group_(phi.group()), n_(phi.vertex_count()) {
    edges_.reserve(phi.edges().size());
    for (const GainEdge& e : phi.edges()) edges_.push_back({e.u, e.v, e.gain, e.half});
}

int BalanceSweep::find(int x) {
    if (parent_[x] == x) return x;
    int path[33];
    int len = 0;
    int cur = x;
    while (parent_[cur] != cur) {
        path[len++] = cur;
        cur = parent_[cur];
    }
    // Compress top-down so each pot_ becomes the gain straight to the root.
    for (int i = len - 1; i >= 0; --i) {
        const int y = path[i];
        if (parent_[y] != cur) pot_[y] = group_.mul(pot_[parent_[y]], pot_[y]);
        parent_[y] = cur;
    }
    return cur;
}

void BalanceSweep::unbalance(int root) {
    if (!unbal_[root]) {
        unbal_[root] = true;
        --balanced_;
    }
}

int BalanceSweep::b(EdgeSubset s) {
    for (int v = 1; v <= n_; ++v) {
        parent_[v] = v;
        size_[v] = 1;
        pot_[v] = FiniteGroup::identity;
        unbal_[v] = false;
    }
    balanced_ = n_;

    for (EdgeSubset bit = s; bit != 0; bit &= bit - 1) {
        const FlatEdge& e = edges_[static_cast<size_t>(std::countr_zero(bit))];
        if (e.half) {
            unbalance(find(e.v));
            continue;
        }
        int ru = find(e.u);
        int rv = find(e.v);
        const int gu = pot_[e.u];  // theta(u) = theta(ru) * gu after find
        const int gv = pot_[e.v];
        if (ru == rv) {
            if (group_.mul(gu, e.gain) != gv) unbalance(ru);
            continue;
        }
        const bool was_bal = !unbal_[ru] && !unbal_[rv];
        const int prev_bal = (unbal_[ru] ? 0 : 1) + (unbal_[rv] ? 0 : 1);
        if (size_[ru] < size_[rv]) {
            // theta(ru) = theta(rv) * gv * gain^-1 * gu^-1
            parent_[ru] = rv;
            pot_[ru] = group_.mul(group_.mul(gv, group_.inv(e.gain)), group_.inv(gu));
            size_[rv] += size_[ru];
            unbal_[rv] = !was_bal;
            balanced_ -= prev_bal - (was_bal ? 1 : 0);
        } else {
            // theta(rv) = theta(ru) * gu * gain * gv^-1
            parent_[rv] = ru;
            pot_[rv] = group_.mul(group_.mul(gu, e.gain), group_.inv(gv));
            size_[ru] += size_[rv];
            unbal_[ru] = !was_bal;
            balanced_ -= prev_bal - (was_bal ? 1 : 0);
        }
    }
    return balanced_;
}

}  // namespace dowling
