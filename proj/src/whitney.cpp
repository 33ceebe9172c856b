#include "dowling/whitney.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "dowling/chromatic.hpp"

namespace dowling {

const Int& StirlingTable::signless(int n, int k) {
    if (n < 0 || k < 0 || k > n) return zero_;
    while (static_cast<int>(rows_.size()) <= n) {
        const int m = static_cast<int>(rows_.size());
        const auto& prev = rows_.back();
        std::vector<Int> row(static_cast<size_t>(m) + 1, Int(0));
        for (int j = 1; j <= m; ++j) row[static_cast<size_t>(j)] = prev[static_cast<size_t>(j) - 1];
        for (int j = 0; j < m; ++j) row[static_cast<size_t>(j)] += Int(m - 1) * prev[static_cast<size_t>(j)];
        rows_.push_back(std::move(row));
    }
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Int stirling_signless(int n, int k) {
    static StirlingTable table;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return table.signless(n, k);
}

namespace {

// Whitney vectors of deleted subgraphs recur constantly in the stable-set
// sums; memoize them by the labeled edge set.
WhitneyVector whitney_cached(const SimpleGraph& g) {
    static std::unordered_map<std::string, WhitneyVector> cache;
    static std::mutex mutex;
    const std::string key = g.canonical_key();
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int n = g.vertex_count();
    const LambdaPoly chibar = signless(chromatic_graph(g), n);
    WhitneyVector w(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) w[static_cast<size_t>(i)] = chibar.coeff(n - i);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, w);
    return w;
}

}  // namespace

WhitneyVector whitney_graph(const SimpleGraph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("whitney_graph needs at least one vertex");
    return whitney_cached(g);
}

GammaPoly whitney_full(const SimpleGraph& g, int i) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("whitney_full needs order > 0");
    if (i < 0 || i > n) throw std::out_of_range("whitney index out of 0..n");
    const WhitneyVector w = whitney_cached(g);
    std::vector<Int> coeff(static_cast<size_t>(i) + 1, Int(0));
    for (int j = 0; j <= i; ++j) coeff[static_cast<size_t>(j)] = w[static_cast<size_t>(j)] * binom(n - j, i - j);
    return GammaPoly::from_coeffs(std::move(coeff));
}

GammaPoly whitney_partial(const SimpleGraph& g, VertexSet x, int i) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("whitney_partial needs order > 0");
    if (i < 0 || i > n) throw std::out_of_range("whitney index out of 0..n");
    if (!x.subset_of(g.vertices()))
        throw std::invalid_argument("half-edge set must be a subset of the vertices");

    std::vector<Int> coeff(static_cast<size_t>(i) + 1, Int(0));
    for (const VertexSet& y : stable_sets(g, x.complement_in(n), i)) {
        const int k = y.size();
        const WhitneyVector w = whitney_cached(delete_vertices(g, y).graph);
        for (int j = 0; j + k <= i; ++j) {
            if (j >= static_cast<int>(w.size())) break;
            const Int term = binom(n - j - k, n - i) * w[static_cast<size_t>(j)];
            if (k % 2 == 0)
                coeff[static_cast<size_t>(j)] += term;
            else
                coeff[static_cast<size_t>(j)] -= term;
        }
    }
    return GammaPoly::from_coeffs(std::move(coeff));
}

LowerWhitneys lower_whitney(const SimpleGraph& g, VertexSet x) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("lower_whitney needs order > 0");
    const GraphStats s = graph_stats(g, x);

    LowerWhitneys out;
    out.w0 = GammaPoly(1);
    out.w1 = GammaPoly::from_coeffs({Int(s.x_size), Int(s.edge_count)});

    const Int c2 = binom(s.edge_count, 2) - s.triangles;
    Int c1 = Int(s.x_size - 1) * s.edge_count;
    for (int v = 1; v <= n; ++v)
        if (!x.contains(v)) c1 += s.degrees[static_cast<size_t>(v) - 1];
    // (n-1)(|X| - n/2) computed as (n-1)(2|X| - n)/2; the product is even.
    const Int twice = Int(n - 1) * (2 * s.x_size - n);
    if (twice % 2 != 0) throw std::logic_error("half-integer bracket did not cancel");
    const Int c0 = twice / 2 + s.complement_edges_avoiding_x;
    out.w2 = GammaPoly::from_coeffs({c0, c1, c2});
    return out;
}

SpecialCoefficients special_coefficients(const SimpleGraph& g, VertexSet x, int i) {
    const int n = g.vertex_count();
    if (i < 0 || i > n) throw std::out_of_range("whitney index out of 0..n");
    if (!x.subset_of(g.vertices()))
        throw std::invalid_argument("half-edge set must be a subset of the vertices");
    const int c = components(g).count;
    const int z = zeta(g, x);

    SpecialCoefficients out;

    const SimpleGraph away = delete_vertices(g, x).graph;
    out.constant = 0;
    for (int k = 0; k <= i; ++k) {
        const Int term = binom(n - k, i - k) * alpha(away, k);
        out.constant += (k % 2 == 0) ? term : Int(-term);
    }

    if (i >= 1 && i <= n - c) {
        const WhitneyVector w = whitney_cached(g);
        Int sub = Int(n + 1 - i) * w[static_cast<size_t>(i) - 1];
        for (int v = 1; v <= n; ++v) {
            if (x.contains(v)) continue;
            const WhitneyVector wv = whitney_cached(delete_vertices(g, VertexSet::of({v})).graph);
            if (i - 1 < static_cast<int>(wv.size())) sub -= wv[static_cast<size_t>(i) - 1];
        }
        out.subleading = sub;
    }

    const WhitneyVector w = whitney_cached(g);
    if (i <= n - c)
        out.leading = w[static_cast<size_t>(i)];
    else
        out.leading = w[static_cast<size_t>(n - c)] * binom(c - z, i - (n - c));
    return out;
}

GammaPoly dowling_whitney(int n, int i) {
    if (n < 1) throw std::invalid_argument("dowling_whitney needs n >= 1");
    if (i < 0 || i > n) throw std::out_of_range("whitney index out of 0..n");
    std::vector<Int> coeff(static_cast<size_t>(i) + 1, Int(0));
    for (int j = 0; j <= i; ++j)
        coeff[static_cast<size_t>(j)] = stirling_signless(n, n - j) * binom(n - j, i - j);
    return GammaPoly::from_coeffs(std::move(coeff));
}

bool check_stirling_identity(int n, int i) {
    if (n < 1 || i < 0 || i > n) return false;
    Int lhs = 0;
    for (int j = 0; j <= i; ++j) {
        lhs += stirling_signless(n, n - j) * binom(n - j, i - j);
        lhs -= Int(n) * stirling_signless(n - 1, n - j - 1) * binom(n - j - 1, i - j - 1);
    }
    if (lhs != stirling_signless(n, n - i)) return false;
    // The jointless expansion at gamma = 1 must reproduce the same numbers.
    const GammaPoly w = whitney_partial(complete_graph(n), VertexSet{}, i);
    return w.eval(1) == stirling_signless(n, n - i);
}

bool check_vandermonde(int c, int zeta_count, int m) {
    if (!(c >= m && m >= 0) || zeta_count < 0 || zeta_count > c)
        throw std::invalid_argument("check_vandermonde needs c >= m >= 0 and 0 <= zeta <= c");
    Int lhs = 0;
    for (int k = 0; k <= m; ++k) {
        const Int term = binom(zeta_count, k) * binom(c - k, c - m);
        lhs += (k % 2 == 0) ? term : Int(-term);
    }
    return lhs == binom(c - zeta_count, m);
}

}  // namespace dowling
