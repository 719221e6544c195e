#pragma once

#include <optional>

#include "causal_bgk/graph.hpp"

namespace causal_bgk {

struct EffectQuery {
    VertexSet X;
    VertexSet Y;
    std::optional<VertexSet> Z;

    // throws ContractError unless X, Y nonempty and X, Y, Z pairwise disjoint
    void validate() const;
};

// every proper possibly causal path from X to Y leaves X along a directed edge
bool is_identifiable(const Pdag& h, const EffectQuery& q);

// possible descendants of the vertices outside X on proper possibly causal
// paths from X to Y
VertexSet forbidden_set(const Pdag& h, const VertexSet& X, const VertexSet& Y);

// q.Z must be set
bool satisfies_b_adjustment(const Pdag& h, const EffectQuery& q);

struct AdjustmentSearch {
    int exhaustive_limit = 20;  // largest graph for the subset fallback
};

// Tries the possible-ancestor candidate first, then smallest subsets.
// nullopt when the effect is not identifiable or no set passes.
std::optional<VertexSet> find_adjustment_set(const Pdag& h, const VertexSet& X, const VertexSet& Y,
                                             const AdjustmentSearch& opt = {});

}  // namespace causal_bgk
