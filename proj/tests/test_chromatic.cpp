#include <doctest.h>

#include <algorithm>
#include <random>

#include "dowling/chromatic.hpp"
#include "oracles.hpp"

using namespace dowling;

TEST_CASE("chromatic polynomials of graphs") {
    CHECK(chromatic_graph(edgeless_graph(4)) == LambdaPoly::monomial(1, 4));
    CHECK(chromatic_graph(parse_graph("P2")) == LambdaPoly::from_coeffs({0, 1, -2, 1}));
    CHECK(chromatic_graph(complete_graph(3)) == LambdaPoly::from_coeffs({0, 2, -3, 1}));
    CHECK(chromatic_graph(cycle_graph(4)) == LambdaPoly::from_coeffs({0, -3, 6, -4, 1}));
}

TEST_CASE("chromatic matches color counting") {
    for (int n = 1; n <= 4; ++n)
        for (const SimpleGraph& g : all_labeled_graphs(n)) {
            const LambdaPoly chi = chromatic_graph(g);
            for (int q = 0; q <= 4; ++q) CHECK(chi.eval(q) == oracles::count_proper_colorings(g, q));
        }
    // a couple of denser instances
    for (const char* spec : {"K5", "n=5; 1-2,2-3,3-4,4-5,1-5,1-3", "C5"}) {
        const SimpleGraph g = parse_graph(spec);
        const LambdaPoly chi = chromatic_graph(g);
        for (int q = 0; q <= 5; ++q) CHECK(chi.eval(q) == oracles::count_proper_colorings(g, q));
    }
}

TEST_CASE("product rule over components") {
    const SimpleGraph both = parse_graph("n=5; 1-2,2-3,4-5");
    CHECK(chromatic_graph(both) == chromatic_graph(parse_graph("P2")) * chromatic_graph(complete_graph(2)));
    const SimpleGraph with_isolated = parse_graph("n=4; 1-2,1-3,2-3");
    CHECK(chromatic_graph(with_isolated) == chromatic_graph(complete_graph(3)) * LambdaPoly::variable());
}

TEST_CASE("subset expansion route") {
    const GainGraph empty = expand(edgeless_graph(3), VertexSet{}, FiniteGroup::cyclic(2));
    CHECK(chromatic_subset_expansion(empty) == LambdaPoly::monomial(1, 3));

    const GainGraph k2full = expand(complete_graph(2), VertexSet::all(2), FiniteGroup::cyclic(1));
    CHECK(chromatic_subset_expansion(k2full) == LambdaPoly::from_coeffs({2, -3, 1}));

    const SimpleGraph p2 = parse_graph("P2");
    const GainGraph p2z2 = expand(p2, p2.vertices(), FiniteGroup::cyclic(2));
    CHECK(chromatic_subset_expansion(p2z2) == LambdaPoly::from_coeffs({-9, 15, -7, 1}));

    SweepOptions tight;
    tight.edge_cap = 5;
    CHECK_THROWS_AS(chromatic_subset_expansion(p2z2, tight), CapExceeded);
}

TEST_CASE("parallel sweep is bit-identical to sequential") {
    const SimpleGraph k3 = complete_graph(3);
    const GainGraph phi = expand(k3, VertexSet::all(3), FiniteGroup::cyclic(3));  // 12 edges
    SweepOptions seq, par3, par5;
    par3.threads = 3;
    par5.threads = 5;
    const LambdaPoly a = chromatic_subset_expansion(phi, seq);
    CHECK(a == chromatic_subset_expansion(phi, par3));
    CHECK(a == chromatic_subset_expansion(phi, par5));
}

TEST_CASE("full-expansion reduction") {
    const SimpleGraph p2 = parse_graph("P2");
    CHECK(chromatic_full(p2, 1) == LambdaPoly::from_coeffs({-4, 8, -5, 1}));
    CHECK(chromatic_full(p2, 2) == LambdaPoly::from_coeffs({-9, 15, -7, 1}));
    CHECK(chromatic_full(edgeless_graph(1), 7) == LambdaPoly::from_coeffs({-1, 1}));

    // agrees with brute force over a concrete group of each order
    for (int n = 1; n <= 3; ++n)
        for (const SimpleGraph& g : all_labeled_graphs(n))
            for (int gamma = 1; gamma <= 3; ++gamma) {
                const GainGraph phi = expand(g, g.vertices(), FiniteGroup::cyclic(gamma));
                CHECK(chromatic_full(g, gamma) == chromatic_subset_expansion(phi));
            }
}

TEST_CASE("group structure does not matter") {
    const FiniteGroup z6 = FiniteGroup::cyclic(6);
    const FiniteGroup s3 = oracles::symmetric_group_3();
    for (const char* spec : {"K2", "E2"}) {
        const SimpleGraph g = parse_graph(spec);
        for (std::uint32_t bits = 0; bits < 4; ++bits) {
            const VertexSet x{bits};
            CHECK(chromatic_subset_expansion(expand(g, x, z6)) ==
                  chromatic_subset_expansion(expand(g, x, s3)));
        }
    }
}

TEST_CASE("partial expansion bivariate polynomial") {
    const SimpleGraph p2 = parse_graph("P2");

    const BivariatePoly full = chromatic_partial(p2, VertexSet::all(3));
    CHECK(full.lambda_degree() == 3);
    CHECK(full.lambda_coeff(3) == GammaPoly(1));
    CHECK(full.lambda_coeff(2) == GammaPoly::from_coeffs({3, 2}));
    CHECK(full.lambda_coeff(1) == GammaPoly::from_coeffs({3, 4, 1}));
    CHECK(full.lambda_coeff(0) == GammaPoly::from_coeffs({1, 2, 1}));

    const BivariatePoly none = chromatic_partial(p2, VertexSet{});
    CHECK(none.lambda_coeff(3) == GammaPoly(1));
    CHECK(none.lambda_coeff(2) == GammaPoly::from_coeffs({0, 2}));
    CHECK(none.lambda_coeff(1) == GammaPoly::from_coeffs({-2, 2, 1}));
    CHECK(none.lambda_coeff(0) == GammaPoly::from_coeffs({-1, 0, 1}));

    CHECK(chromatic_partial(edgeless_graph(1), VertexSet{}) ==
          BivariatePoly::lambda_monomial(GammaPoly(1), 1));
}

TEST_CASE("partial route agrees with brute force") {
    for (int n = 1; n <= 3; ++n)
        for (const SimpleGraph& g : all_labeled_graphs(n))
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                const VertexSet x{bits};
                const BivariatePoly partial = chromatic_partial(g, x);
                CHECK(partial.lambda_coeff(n) == GammaPoly(1));  // monic
                for (int gamma = 1; gamma <= 3; ++gamma) {
                    const GainGraph phi = expand(g, x, FiniteGroup::cyclic(gamma));
                    const LambdaPoly brute = signless(chromatic_subset_expansion(phi), n);
                    CHECK(partial.at_gamma(gamma) == brute);
                }
            }
}

TEST_CASE("no-broken-circuit counts") {
    const SimpleGraph k3 = complete_graph(3);
    CHECK(nbc_count(k3, 0) == 1);
    CHECK(nbc_count(k3, 1) == 3);
    CHECK(nbc_count(k3, 2) == 2);
    CHECK(nbc_count(k3, 3) == 0);

    std::mt19937 rng(4242);
    for (int n = 1; n <= 4; ++n)
        for (const SimpleGraph& g : all_labeled_graphs(n)) {
            const LambdaPoly chibar = signless(chromatic_graph(g), n);
            std::vector<int> reversed(static_cast<size_t>(g.edge_count()));
            std::vector<int> shuffled(static_cast<size_t>(g.edge_count()));
            for (int e = 0; e < g.edge_count(); ++e) {
                reversed[static_cast<size_t>(e)] = g.edge_count() - 1 - e;
                shuffled[static_cast<size_t>(e)] = e;
            }
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (int i = 0; i <= n; ++i) {
                const Int expected = chibar.coeff(n - i);
                CHECK(nbc_count(g, i) == expected);
                CHECK(nbc_count(g, i, reversed) == expected);
                CHECK(nbc_count(g, i, shuffled) == expected);
            }
        }
}
