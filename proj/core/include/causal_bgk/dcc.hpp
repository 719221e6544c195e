#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "causal_bgk/graph.hpp"

namespace causal_bgk {

enum class ConstraintKind { direct, ancestral, non_ancestral };

struct PairwiseConstraint {
    ConstraintKind kind;
    Vertex tail;
    Vertex head;
    friend bool operator==(const PairwiseConstraint&, const PairwiseConstraint&) = default;
};

// "tail is a direct cause of at least one vertex in heads"
struct Dcc {
    Vertex tail = -1;
    VertexSet heads;
    friend bool operator==(const Dcc& a, const Dcc& b) { return a.tail == b.tail && a.heads == b.heads; }
};

// insertion order matters: residual extraction is order dependent
using DccSet = std::vector<Dcc>;

Dcc make_dcc(const Pdag& g, Vertex tail, std::initializer_list<Vertex> heads);
std::string format_dcc(const Pdag& g, const Dcc& c);
std::string format_constraint(const Pdag& g, const PairwiseConstraint& c);

// neighbours of x on some chordless partially directed path from x to y
VertexSet critical_set(const Pdag& g, Vertex x, Vertex y);

DccSet constraints_to_dccs(const Pdag& g, const std::vector<PairwiseConstraint>& b);

// tiers must partition the vertex set; earlier tiers may only cause later ones
std::vector<PairwiseConstraint> tiered_to_direct(const Pdag& g, const std::vector<VertexSet>& tiers);

// Drops clauses already satisfied by a child of the tail and intersects the
// rest with the tail's siblings. Empty head sets are kept: they never hold.
DccSet reduced_form(const Pdag& g, const DccSet& k);

// reduced clauses with tail and heads inside u; u must carry no directed edge
DccSet restriction(const Pdag& g, const DccSet& k, const VertexSet& u);

// simplicial vertices of g_u(u) that are not tails of restricted clauses
VertexSet potential_leaf_nodes(const Pdag& g, const DccSet& k, const VertexSet& u);

// Leaf elimination over the whole undirected part. Returns the vertices left
// when no potential leaf node exists (empty iff consistent).
VertexSet elimination_residue(const Pdag& g, const DccSet& k);

bool check_consistency(const Pdag& g, const DccSet& k);

// clauses u => {t} for each head u adjacent to t: the negation of c
DccSet negation(const Pdag& g, const Dcc& c);

bool check_equivalency(const Pdag& g, const DccSet& k1, const DccSet& k2);

// [g, k] == [g, k + c]; throws InconsistentError if k is inconsistent
bool is_redundant(const Pdag& g, const DccSet& k, const Dcc& c);

// Incremental knowledge. Values: session_add returns a new session.
struct KnowledgeSession {
    Cpdag base;
    DccSet accepted;
    Mpdag current;

    static KnowledgeSession start(const Cpdag& g);
};

struct SessionRejection {
    Dcc clause;
    // heads already forced to be parents of the tail
    VertexSet forcing_parents;
};

using SessionResult = std::variant<KnowledgeSession, SessionRejection>;

SessionResult session_add(const KnowledgeSession& s, const Dcc& c);

}  // namespace causal_bgk
