#pragma once

#include <functional>
#include <vector>

#include "causal_bgk/graph.hpp"

namespace causal_bgk {

using Path = std::vector<Vertex>;
// return false to stop the enumeration
using PathVisitor = std::function<bool(const Path&)>;

// Simple paths from some x in X to some y in Y whose intermediate vertices
// avoid X and Y. X and Y must be disjoint.
void for_each_proper_path(const Pdag& g, const VertexSet& X, const VertexSet& Y, const PathVisitor& visit);

// As above, keeping only paths with no edge pointing from a later vertex to an
// earlier one.
void for_each_proper_possibly_causal_path(const Pdag& g, const VertexSet& X, const VertexSet& Y,
                                          const PathVisitor& visit);
std::vector<Path> proper_possibly_causal_paths(const Pdag& g, const VertexSet& X, const VertexSet& Y);

bool is_possibly_causal(const Pdag& g, const Path& p);
bool is_partially_directed(const Pdag& g, const Path& p);

enum class NodeStatus { collider, definite_non_collider, indefinite };
// status of b on a path segment a, b, c
NodeStatus node_status(const Pdag& g, Vertex a, Vertex b, Vertex c);
bool is_definite_status(const Pdag& g, const Path& p);

// Throws ContractError for paths that are not of definite status or that have
// an endpoint in Z.
bool blocked(const Pdag& g, const Path& p, const VertexSet& Z);

// vertices reachable from S along - and -> edges, S included
VertexSet possible_descendants(const Pdag& g, const VertexSet& S);
VertexSet possible_ancestors(const Pdag& g, const VertexSet& S);

}  // namespace causal_bgk
