#pragma once

#include <string>
#include <vector>

#include "causal_bgk/graph.hpp"

namespace causal_bgk {

struct BComponent {
    VertexSet vertices;
    // edges of g inside the component, directed ones kept; same ids as g
    Pdag subgraph;
};

// partition by reachability over undirected edges, ordered by smallest member
std::vector<BComponent> b_components(const Pdag& g);

// directed edges inside a B-component become undirected
Pdag chain_skeleton(const Pdag& g);

enum class Condition { chain_graph, chordal, shared_parents, inner_edge };

struct Violation {
    Condition condition;
    std::vector<Vertex> vertices;  // offending vertices or component
    std::vector<Edge> edges;       // offending edges, if any
    std::string detail;
};

struct CharacterizationReport {
    bool is_causal_mpdag = true;
    std::vector<Violation> violations;
};

// Graphical characterization of causal MPDAGs. Reports every violated
// condition with a witness.
CharacterizationReport is_causal_mpdag(const Pdag& g);

// Directed edges appearing in one of the five protecting configurations.
// Throws ContractError if g is not a causal MPDAG.
std::vector<Edge> m_strongly_protected(const Pdag& g);
std::vector<Edge> minimal_generator(const Pdag& g);

// skeleton and v-structures of g, closed; throws ContractError if g is not a
// causal MPDAG
Cpdag cpdag_of(const Pdag& g);

const char* condition_name(Condition c);

}  // namespace causal_bgk
