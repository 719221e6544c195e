#pragma once

#include <vector>

#include "causal_bgk/dcc.hpp"
#include "causal_bgk/graph.hpp"

namespace causal_bgk {

struct OrientationComponent {
    VertexSet vertices;
    Vertex target = -1;
    // g's undirected edges inside `vertices`, same vertex ids as g
    Pdag subgraph;
};

// Shrinks x's chain component by removing potential leaf nodes other than x
// until x is the only one left. Throws InconsistentError if k is inconsistent.
OrientationComponent maximal_orientation_component(const Cpdag& g, const DccSet& k, Vertex x);

// g plus w -> y for every neighbour w of y inside y's maximal orientation
// component, closed under the orientation rules
Mpdag construct_mpdag(const Cpdag& g, const DccSet& k);

// Greedy pass in input order: drops every clause that the MPDAG together with
// the clauses still kept already implies.
DccSet minimal_residual(const Cpdag& g, const DccSet& k);
DccSet minimal_residual(const Cpdag& g, const DccSet& k, const Mpdag& h);

struct Decomposition {
    Mpdag mpdag;
    DccSet residual;
    // the clause form of the input knowledge
    DccSet clauses;
};

Decomposition decompose(const Cpdag& g, const std::vector<PairwiseConstraint>& b);
Decomposition decompose(const Cpdag& g, const DccSet& k);

bool is_fully_informative(const Cpdag& g, const DccSet& k, const Mpdag& h);

}  // namespace causal_bgk
