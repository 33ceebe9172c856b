#include "dowling/chromatic.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace dowling {

namespace {

std::unordered_map<std::string, LambdaPoly>& chromatic_cache() {
    static std::unordered_map<std::string, LambdaPoly> cache;
    return cache;
}
std::mutex cache_mutex;

bool cache_lookup(const std::string& key, LambdaPoly& out) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = chromatic_cache().find(key);
    if (it == chromatic_cache().end()) return false;
    out = it->second;
    return true;
}

void cache_store(const std::string& key, const LambdaPoly& value) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    chromatic_cache().emplace(key, value);
}

SimpleGraph drop_edge(const SimpleGraph& g, std::pair<int, int> e) {
    std::vector<std::pair<int, int>> edges;
    for (auto f : g.edges())
        if (f != e) edges.push_back(f);
    return SimpleGraph(g.vertex_count(), std::move(edges));
}

// Contract edge {u,v}: merge v into u, relabel compactly, drop the parallel
// copies that merging creates.  Returns the zero polynomial marker via the
// bool in case a loop survives (cannot happen for simple inputs).
bool contract_edge(const SimpleGraph& g, std::pair<int, int> e, SimpleGraph& out) {
    const auto [keep, gone] = e;
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (std::pair{a, b} == e) continue;
        if (a == gone) a = keep;
        if (b == gone) b = keep;
        if (a == b) return false;  // loop: chromatic polynomial vanishes
        if (a > gone) --a;
        if (b > gone) --b;
        if (a > b) std::swap(a, b);
        edges.insert({a, b});
    }
    out = SimpleGraph(g.vertex_count() - 1, {edges.begin(), edges.end()});
    return true;
}

LambdaPoly chromatic_rec(const SimpleGraph& g) {
    if (g.edge_count() == 0) return LambdaPoly::monomial(1, g.vertex_count());
    const std::string key = g.canonical_key();
    LambdaPoly cached;
    if (cache_lookup(key, cached)) return cached;

    LambdaPoly result;
    const Components comps = components(g);
    if (comps.count > 1) {
        result = LambdaPoly(1);
        for (const VertexSet& block : comps.blocks)
            result *= chromatic_rec(delete_vertices(g, block.complement_in(g.vertex_count())).graph);
    } else {
        const auto e = g.edges().front();
        result = chromatic_rec(drop_edge(g, e));
        SimpleGraph contracted;
        if (contract_edge(g, e, contracted)) result -= chromatic_rec(contracted);
    }
    cache_store(key, result);
    return result;
}

}  // namespace

LambdaPoly chromatic_graph(const SimpleGraph& g) { return chromatic_rec(g); }

LambdaPoly chromatic_subset_expansion(const GainGraph& phi, const SweepOptions& opts) {
    const int m = phi.edge_count();
    if (m > opts.edge_cap)
        throw CapExceeded("subset expansion over " + std::to_string(m) + " edges exceeds cap " +
                          std::to_string(opts.edge_cap));
    const int n = phi.vertex_count();
    const EdgeSubset total = EdgeSubset(1) << m;

    auto sweep_range = [&phi, n](EdgeSubset lo, EdgeSubset hi, std::vector<long long>& acc) {
        BalanceSweep sweep(phi);
        acc.assign(static_cast<size_t>(n) + 1, 0);
        for (EdgeSubset s = lo; s < hi; ++s) {
            const int b = sweep.b(s);
            acc[static_cast<size_t>(b)] += (std::popcount(s) % 2 == 0) ? 1 : -1;
        }
    };

    int workers = std::max(1, opts.threads);
    if (EdgeSubset(workers) > total) workers = static_cast<int>(total);

    std::vector<std::vector<long long>> acc(static_cast<size_t>(workers));
    if (workers == 1) {
        sweep_range(0, total, acc[0]);
    } else {
        std::vector<std::thread> pool;
        const EdgeSubset chunk = total / static_cast<EdgeSubset>(workers);
        for (int w = 0; w < workers; ++w) {
            const EdgeSubset lo = chunk * static_cast<EdgeSubset>(w);
            const EdgeSubset hi = (w + 1 == workers) ? total : lo + chunk;
            pool.emplace_back(sweep_range, lo, hi, std::ref(acc[static_cast<size_t>(w)]));
        }
        for (auto& t : pool) t.join();
    }

    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    for (const auto& part : acc)
        for (size_t b = 0; b < part.size(); ++b) coeffs[b] += part[b];
    return LambdaPoly::from_coeffs(std::move(coeffs));
}

LambdaPoly chromatic_full(const SimpleGraph& g, int gamma_order) {
    if (gamma_order < 1) throw std::invalid_argument("group order must be >= 1");
    const int n = g.vertex_count();
    return expansion_substitute(chromatic_graph(g), n, SubstSign::minus).at_gamma(gamma_order);
}

BivariatePoly chromatic_partial(const SimpleGraph& g, VertexSet x) {
    if (!x.subset_of(g.vertices()))
        throw std::invalid_argument("half-edge set must be a subset of the vertices");
    const int n = g.vertex_count();
    BivariatePoly acc;
    for (const VertexSet& y : stable_sets(g, x.complement_in(n), n)) {
        const int ny = n - y.size();
        const LambdaPoly chibar = signless(chromatic_graph(delete_vertices(g, y).graph), ny);
        const BivariatePoly term = expansion_substitute(chibar, ny, SubstSign::plus);
        if (y.size() % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

namespace {

// All edge subsets of g forming a single circle, as bitmasks over g.edges().
std::vector<std::uint64_t> cycle_masks(const SimpleGraph& g) {
    const int m = g.edge_count();
    if (m > 20) throw CapExceeded("cycle enumeration over " + std::to_string(m) + " edges");
    std::vector<std::uint64_t> cycles;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        const int edges_used = std::popcount(mask);
        if (edges_used < 3) continue;
        int deg[33] = {};
        std::uint32_t support = 0;
        for (std::uint64_t b = mask; b != 0; b &= b - 1) {
            const auto [u, v] = g.edges()[static_cast<size_t>(std::countr_zero(b))];
            ++deg[u];
            ++deg[v];
            support |= (1u << (u - 1)) | (1u << (v - 1));
        }
        if (std::popcount(support) != edges_used) continue;
        bool all_two = true;
        for (std::uint32_t b = support; b != 0; b &= b - 1)
            if (deg[std::countr_zero(b) + 1] != 2) all_two = false;
        if (!all_two) continue;
        // connectivity of the support under the chosen edges
        std::uint32_t reached = support & (~support + 1);
        for (;;) {
            std::uint32_t next = reached;
            for (std::uint64_t b = mask; b != 0; b &= b - 1) {
                const auto [u, v] = g.edges()[static_cast<size_t>(std::countr_zero(b))];
                const std::uint32_t bu = 1u << (u - 1), bv = 1u << (v - 1);
                if (reached & bu) next |= bv;
                if (reached & bv) next |= bu;
            }
            if (next == reached) break;
            reached = next;
        }
        if (reached == support) cycles.push_back(mask);
    }
    return cycles;
}

}  // namespace

Int nbc_count(const SimpleGraph& g, int i) {
    std::vector<int> order(static_cast<size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    return nbc_count(g, i, order);
}

Int nbc_count(const SimpleGraph& g, int i, const std::vector<int>& edge_order) {
    const int m = g.edge_count();
    if (static_cast<int>(edge_order.size()) != m)
        throw std::invalid_argument("edge order must be a permutation of all edge indices");
    if (i < 0) return 0;

    // position[e] = rank of edge e in the total order
    std::vector<int> position(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) position[static_cast<size_t>(edge_order[static_cast<size_t>(r)])] = r;

    std::vector<std::uint64_t> broken;
    for (std::uint64_t cycle : cycle_masks(g)) {
        int largest = -1, largest_pos = -1;
        for (std::uint64_t b = cycle; b != 0; b &= b - 1) {
            const int e = std::countr_zero(b);
            if (position[static_cast<size_t>(e)] > largest_pos) {
                largest_pos = position[static_cast<size_t>(e)];
                largest = e;
            }
        }
        broken.push_back(cycle & ~(std::uint64_t(1) << largest));
    }

    Int count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        if (std::popcount(mask) != i) continue;
        bool ok = true;
        for (std::uint64_t bc : broken)
            if ((bc & mask) == bc) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

}  // namespace dowling
