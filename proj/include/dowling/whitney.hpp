#ifndef DOWLING_WHITNEY_HPP
#define DOWLING_WHITNEY_HPP

#include <optional>
#include <vector>

#include "dowling/graph.hpp"
#include "dowling/polynomial.hpp"

namespace dowling {

// Signless Whitney numbers w0..wn of a graph (or, via the gamma-polynomial
// overloads below, of a group expansion).
using WhitneyVector = std::vector<Int>;

// Signless Stirling numbers of the first kind via the additive recurrence
// s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k); rows grow on demand.
class StirlingTable {
public:
    const Int& signless(int n, int k);

private:
    std::vector<std::vector<Int>> rows_{{Int(1)}};
    Int zero_ = 0;
};

// Module-level shared table (thread-safe).
Int stirling_signless(int n, int k);

// Signless Whitney numbers read off the chromatic polynomial of g.
WhitneyVector whitney_graph(const SimpleGraph& g);

// Theorem on full expansions: w_i of the fully filled expansion as an exact
// polynomial in the group order, sum_j w_j(g) binom(n-j, i-j) gamma^j.
GammaPoly whitney_full(const SimpleGraph& g, int i);

// General partially filled expansions: the triple sum over gamma powers,
// stable-set sizes and deleted-subgraph Whitney numbers.
GammaPoly whitney_partial(const SimpleGraph& g, VertexSet x, int i);

struct LowerWhitneys {
    GammaPoly w0, w1, w2;
};

// Closed forms for w0, w1, w2 in terms of edge count, triangles, degrees and
// the complement's edges away from x.
LowerWhitneys lower_whitney(const SimpleGraph& g, VertexSet x);

struct SpecialCoefficients {
    Int constant;                  // gamma^0 coefficient
    std::optional<Int> subleading; // gamma^(i-1) coefficient; defined for 1 <= i <= n-c
    Int leading;                   // coefficient of gamma^min(i, n-c)
};

SpecialCoefficients special_coefficients(const SimpleGraph& g, VertexSet x, int i);

// Whitney numbers of the rank-n Dowling lattice as polynomials in the group
// order, from the Stirling-number specialization of the full-expansion
// formula on complete base graphs.
GammaPoly dowling_whitney(int n, int i);

// Exact check of the Stirling-number identity extracted from the jointless
// specialization, plus the gamma=1 cross-check against whitney_partial on a
// complete base graph with no half edges.
bool check_stirling_identity(int n, int i);

// Exact check of the alternating Vandermonde-convolution identity
// sum_k (-1)^k binom(zeta,k) binom(c-k,c-m) == binom(c-zeta,m).
bool check_vandermonde(int c, int zeta_count, int m);

}  // namespace dowling

#endif
