#ifndef DOWLING_MATROID_HPP
#define DOWLING_MATROID_HPP

#include <string>
#include <vector>

#include "dowling/gain_graph.hpp"
#include "dowling/polynomial.hpp"

namespace dowling {

struct CharacteristicResult {
    LambdaPoly p;   // characteristic polynomial of the frame matroid
    int b_phi = 0;  // balanced components of the whole edge set
};

// Characteristic polynomial from the rank function alone:
// p(lambda) = sum over S of (-1)^|S| lambda^(rk(E) - rk(S)).
// lambda^b_phi * p equals the chromatic polynomial of the expansion.
CharacteristicResult characteristic_from_ranks(const GainGraph& phi, int edge_cap = 22);

enum class CircuitClass { NotACircuit, C1, C2, C3, Unclassified };

const char* to_string(CircuitClass c);

// Decides circuit-ness by rank minimality and classifies the subgraph's
// shape and gains.  Unclassified is a hard failure of the taxonomy claim,
// never an expected outcome.
CircuitClass classify_circuit(const GainGraph& phi, EdgeSubset s);

// All minimal rank-deficient edge sets of an expansion.
std::vector<EdgeSubset> circuits(const GainGraph& phi, int edge_cap = 14);

struct CrossCheckFamily {
    std::vector<SimpleGraph> graphs;
    bool all_x = true;           // sweep every X subset of each graph
    std::vector<VertexSet> xs;   // used when all_x is false
    std::vector<FiniteGroup> groups;
    int edge_cap = 22;           // instances with more expansion edges are skipped
    int threads = 1;
};

struct CrossCheckFailure {
    std::string graph;
    std::string x;
    std::string group;
    int gamma = 0;
    std::string route_a;
    std::string route_b;
    std::string value_a;
    std::string value_b;
};

struct CrossCheckReport {
    long long instances = 0;
    long long passed = 0;
    long long skipped = 0;
    std::vector<CrossCheckFailure> failures;

    bool ok() const { return failures.empty(); }
};

// For every (graph, X, group) instance, asserts exact agreement of the four
// routes to the signless chromatic polynomial: the Whitney-number formula,
// the bivariate stable-set reduction, the defining subset expansion, and the
// rank-based characteristic polynomial shifted by b(Phi).  Groups of equal
// order must also agree with each other.
CrossCheckReport cross_check(const CrossCheckFamily& family);

}  // namespace dowling

#endif
