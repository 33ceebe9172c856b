#ifndef DOWLING_CHROMATIC_HPP
#define DOWLING_CHROMATIC_HPP

#include <vector>

#include "dowling/gain_graph.hpp"
#include "dowling/graph.hpp"
#include "dowling/polynomial.hpp"

namespace dowling {

// Ordinary chromatic polynomial of a simple graph, monic of degree n and
// multiplicative over components.  Deletion-contraction with component
// splitting, memoized on the labeled edge set (thread-safe).
LambdaPoly chromatic_graph(const SimpleGraph& g);

struct SweepOptions {
    int edge_cap = 26;  // refuse expansions with more edges than this
    int threads = 1;    // workers over the bitmask range; result is identical for any count
};

// Defining subset expansion: chi(lambda) = sum over S of (-1)^|S| lambda^b(S),
// by full enumeration of the 2^|E| edge subsets.
LambdaPoly chromatic_subset_expansion(const GainGraph& phi, const SweepOptions& opts = {});

// Full-expansion reduction gamma^n chi_g((lambda-1)/gamma), specialized.
LambdaPoly chromatic_full(const SimpleGraph& g, int gamma_order);

// Signless chromatic polynomial of the partially filled expansion of g with
// half edges at x, exact in lambda and gamma, via the alternating sum of
// full expansions of g minus its stable sets inside the complement of x.
BivariatePoly chromatic_partial(const SimpleGraph& g, VertexSet x);

// Number of i-edge subsets of g containing no broken circuit, under the
// lexicographic edge order or an explicit permutation of edge indices.
Int nbc_count(const SimpleGraph& g, int i);
Int nbc_count(const SimpleGraph& g, int i, const std::vector<int>& edge_order);

}  // namespace dowling

#endif
