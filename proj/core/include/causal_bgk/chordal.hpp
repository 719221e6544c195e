#pragma once

#include <vector>

#include "causal_bgk/graph.hpp"

namespace causal_bgk {

// Chordality tools. All of them look only at the undirected edges of g and,
// where a set is given, at the subgraph induced on it.

// v's undirected neighbours inside `within` form a clique
bool is_simplicial(const Pdag& g, Vertex v, const VertexSet& within);

// throws ContractError if a directed edge lies inside the tested set
bool is_chordal(const Pdag& g);
bool is_chordal(const Pdag& g, const VertexSet& within);

// Repeatedly removes the lowest-id simplicial vertex. The first vertex is
// oriented as a sink by orient_by_ordering. Throws ContractError when the
// undirected part is not chordal.
std::vector<Vertex> perfect_elimination_ordering(const Pdag& g);
std::vector<Vertex> perfect_elimination_ordering(const Pdag& g, const VertexSet& within);

// orient each undirected edge from the later vertex to the earlier one
Pdag orient_by_ordering(const Pdag& g, const std::vector<Vertex>& order);

}  // namespace causal_bgk
