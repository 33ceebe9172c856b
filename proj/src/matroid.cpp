#include "dowling/matroid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dowling/chromatic.hpp"
#include "dowling/whitney.hpp"

namespace dowling {

CharacteristicResult characteristic_from_ranks(const GainGraph& phi, int edge_cap) {
    const int m = phi.edge_count();
    if (m > edge_cap)
        throw CapExceeded("rank sweep over " + std::to_string(m) + " edges exceeds cap " +
                          std::to_string(edge_cap));
    const int rk_full = rank(phi, phi.full_edge_set());
    std::vector<long long> acc(static_cast<size_t>(rk_full) + 1, 0);
    for (EdgeSubset s = 0; s < (EdgeSubset(1) << m); ++s) {
        const int exponent = rk_full - rank(phi, s);
        acc[static_cast<size_t>(exponent)] += (std::popcount(s) % 2 == 0) ? 1 : -1;
    }
    CharacteristicResult out;
    std::vector<Int> coeffs(acc.begin(), acc.end());
    out.p = LambdaPoly::from_coeffs(std::move(coeffs));
    out.b_phi = phi.vertex_count() - rk_full;
    return out;
}

const char* to_string(CircuitClass c) {
    switch (c) {
        case CircuitClass::NotACircuit: return "NotACircuit";
        case CircuitClass::C1: return "C1";
        case CircuitClass::C2: return "C2";
        case CircuitClass::C3: return "C3";
        default: return "Unclassified";
    }
}

namespace {

struct SubgraphShape {
    std::vector<int> link_ids;     // indices into phi.edges()
    std::vector<int> half_vertices;
};

SubgraphShape split_edges(const GainGraph& phi, EdgeSubset s) {
    SubgraphShape out;
    for (EdgeSubset b = s; b != 0; b &= b - 1) {
        const int idx = std::countr_zero(b);
        const GainEdge& e = phi.edge(idx);
        if (e.half)
            out.half_vertices.push_back(e.v);
        else
            out.link_ids.push_back(idx);
    }
    return out;
}

// Does this set of links form one circle?  Multi-edges count as digons.
bool is_single_circle(const GainGraph& phi, const std::vector<int>& links, std::uint32_t mask) {
    const int k = std::popcount(mask);
    if (k < 2) return false;
    int deg[33] = {};
    std::uint32_t support = 0;
    for (int i = 0; i < static_cast<int>(links.size()); ++i) {
        if (!((mask >> i) & 1u)) continue;
        const GainEdge& e = phi.edge(links[static_cast<size_t>(i)]);
        ++deg[e.u];
        ++deg[e.v];
        support |= (1u << (e.u - 1)) | (1u << (e.v - 1));
    }
    if (std::popcount(support) != k) return false;  // circle has |V| == |E|
    for (std::uint32_t b = support; b != 0; b &= b - 1)
        if (deg[std::countr_zero(b) + 1] != 2) return false;
    std::uint32_t reached = support & (~support + 1);
    for (;;) {
        std::uint32_t next = reached;
        for (int i = 0; i < static_cast<int>(links.size()); ++i) {
            if (!((mask >> i) & 1u)) continue;
            const GainEdge& e = phi.edge(links[static_cast<size_t>(i)]);
            const std::uint32_t bu = 1u << (e.u - 1), bv = 1u << (e.v - 1);
            if (reached & bu) next |= bv;
            if (reached & bv) next |= bu;
        }
        if (next == reached) break;
        reached = next;
    }
    return reached == support;
}

// Gain of a circle, walked from its smallest vertex; neutrality is all the
// caller needs, and that is independent of start and direction.
bool circle_is_neutral(const GainGraph& phi, const std::vector<int>& links, std::uint32_t mask) {
    const FiniteGroup& grp = phi.group();
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(links.size()); ++i)
        if ((mask >> i) & 1u) ids.push_back(links[static_cast<size_t>(i)]);

    const int start = phi.edge(ids.front()).u;
    int at = start;
    int gain = FiniteGroup::identity;
    std::vector<bool> used(ids.size(), false);
    for (size_t step = 0; step < ids.size(); ++step) {
        bool moved = false;
        for (size_t i = 0; i < ids.size() && !moved; ++i) {
            if (used[i]) continue;
            const GainEdge& e = phi.edge(ids[i]);
            if (e.u == at) {
                gain = grp.mul(gain, e.gain);
                at = e.v;
            } else if (e.v == at) {
                gain = grp.mul(gain, grp.inv(e.gain));
                at = e.u;
            } else {
                continue;
            }
            used[i] = true;
            moved = true;
        }
        if (!moved) return false;  // not a closed walk; caller guarantees it is
    }
    return at == start && gain == FiniteGroup::identity;
}

}  // namespace

CircuitClass classify_circuit(const GainGraph& phi, EdgeSubset s) {
    if (phi.edge_count() > 14)
        throw std::invalid_argument("classify_circuit expects expansions with at most 14 edges");
    if ((s & ~phi.full_edge_set()) != 0)
        throw std::invalid_argument("edge subset has bits beyond the expansion's edges");

    const int size = std::popcount(s);
    if (size == 0 || rank(phi, s) >= size) return CircuitClass::NotACircuit;
    for (EdgeSubset b = s; b != 0; b &= b - 1) {
        const EdgeSubset without = s & ~(b & (~b + 1));
        if (rank(phi, without) != size - 1) return CircuitClass::NotACircuit;
    }

    const SubgraphShape shape = split_edges(phi, s);
    const int h = static_cast<int>(shape.half_vertices.size());
    const int nl = static_cast<int>(shape.link_ids.size());

    std::vector<std::uint32_t> circles;
    for (std::uint32_t mask = 0; mask < (1u << nl); ++mask)
        if (is_single_circle(phi, shape.link_ids, mask)) circles.push_back(mask);

    const auto neutral = [&](std::uint32_t mask) { return circle_is_neutral(phi, shape.link_ids, mask); };

    if (h == 0) {
        if (circles.size() == 1) {
            const bool whole = std::popcount(circles[0]) == nl;
            return (whole && neutral(circles[0])) ? CircuitClass::C1 : CircuitClass::Unclassified;
        }
        if (circles.size() == 2)
            return (!neutral(circles[0]) && !neutral(circles[1])) ? CircuitClass::C2
                                                                  : CircuitClass::Unclassified;
        if (circles.size() == 3) {
            for (std::uint32_t c : circles)
                if (neutral(c)) return CircuitClass::Unclassified;
            return CircuitClass::C3;
        }
        return CircuitClass::Unclassified;
    }
    if (h == 1)
        return (circles.size() == 1 && !neutral(circles[0])) ? CircuitClass::C2
                                                             : CircuitClass::Unclassified;
    if (h == 2) return circles.empty() ? CircuitClass::C2 : CircuitClass::Unclassified;
    return CircuitClass::Unclassified;
}

std::vector<EdgeSubset> circuits(const GainGraph& phi, int edge_cap) {
    const int m = phi.edge_count();
    if (m > edge_cap)
        throw CapExceeded("circuit enumeration over " + std::to_string(m) + " edges exceeds cap " +
                          std::to_string(edge_cap));
    BalanceSweep sweep(phi);
    const int n = phi.vertex_count();
    std::vector<std::uint8_t> rk(size_t(1) << m);
    for (EdgeSubset s = 0; s < (EdgeSubset(1) << m); ++s)
        rk[static_cast<size_t>(s)] = static_cast<std::uint8_t>(n - sweep.b(s));

    std::vector<EdgeSubset> out;
    for (EdgeSubset s = 1; s < (EdgeSubset(1) << m); ++s) {
        const int size = std::popcount(s);
        if (rk[static_cast<size_t>(s)] >= size) continue;
        bool minimal = true;
        for (EdgeSubset b = s; b != 0 && minimal; b &= b - 1)
            if (rk[static_cast<size_t>(s & ~(b & (~b + 1)))] != size - 1) minimal = false;
        if (minimal) out.push_back(s);
    }
    return out;
}

namespace {

LambdaPoly signless_chi_from_formula(const SimpleGraph& g, VertexSet x, const Int& gamma) {
    const int n = g.vertex_count();
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i)
        coeffs[static_cast<size_t>(n - i)] = whitney_partial(g, x, i).eval(gamma);
    return LambdaPoly::from_coeffs(std::move(coeffs));
}

}  // namespace

CrossCheckReport cross_check(const CrossCheckFamily& family) {
    CrossCheckReport report;
    // key: (graph index, x bits, gamma) -> first group's signless chi
    std::map<std::tuple<size_t, std::uint32_t, int>, std::pair<std::string, LambdaPoly>> seen;

    for (size_t gi = 0; gi < family.graphs.size(); ++gi) {
        const SimpleGraph& g = family.graphs[gi];
        const int n = g.vertex_count();
        std::vector<VertexSet> xs;
        if (family.all_x) {
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) xs.push_back({bits});
        } else {
            xs = family.xs;
        }
        for (const VertexSet& x : xs) {
            for (const FiniteGroup& grp : family.groups) {
                const int gamma = grp.order();
                const long long m = static_cast<long long>(gamma) * g.edge_count() + x.size();
                if (m > family.edge_cap) {
                    ++report.skipped;
                    continue;
                }
                ++report.instances;

                const GainGraph phi = expand(g, x, grp);
                SweepOptions opts;
                opts.edge_cap = family.edge_cap;
                opts.threads = family.threads;

                const LambdaPoly formula = signless_chi_from_formula(g, x, gamma);
                const LambdaPoly bivariate = chromatic_partial(g, x).at_gamma(gamma);
                const LambdaPoly brute = signless(chromatic_subset_expansion(phi, opts), n);
                const CharacteristicResult cr = characteristic_from_ranks(phi, family.edge_cap);
                const LambdaPoly from_rank = signless(cr.p.shifted(cr.b_phi), n);

                auto fail = [&](const char* ra, const LambdaPoly& va, const char* rb, const LambdaPoly& vb) {
                    report.failures.push_back({g.str(), x.str(), grp.name(), gamma, ra, rb, va.str(), vb.str()});
                };

                bool ok = true;
                if (bivariate != formula) {
                    fail("whits-formula", formula, "bivariate", bivariate);
                    ok = false;
                }
                if (brute != formula) {
                    fail("whits-formula", formula, "subset-expansion", brute);
                    ok = false;
                }
                if (from_rank != formula) {
                    fail("whits-formula", formula, "rank-characteristic", from_rank);
                    ok = false;
                }

                const auto key = std::make_tuple(gi, x.bits, gamma);
                auto it = seen.find(key);
                if (it == seen.end()) {
                    seen.emplace(key, std::make_pair(grp.name(), brute));
                } else if (it->second.second != brute) {
                    report.failures.push_back({g.str(), x.str(), grp.name(), gamma,
                                               "subset-expansion(" + it->second.first + ")",
                                               "subset-expansion(" + grp.name() + ")",
                                               it->second.second.str(), brute.str()});
                    ok = false;
                }
                if (ok) ++report.passed;
            }
        }
    }
    return report;
}

}  // namespace dowling
