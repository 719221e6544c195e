#pragma once

#include <vector>

#include "causal_bgk/dcc.hpp"
#include "causal_bgk/effects.hpp"
#include "causal_bgk/graph.hpp"

namespace causal_bgk {

// Brute-force reference semantics for small graphs.

struct OracleOptions {
    int max_component = 8;  // largest chain component enumerated
};

struct RestrictedClass {
    Cpdag base;
    std::vector<Dag> members;
};

// all DAGs with g's skeleton and v-structures; throws CapabilityError past the cap
std::vector<Dag> enumerate_class(const Cpdag& g, const OracleOptions& opt = {});

bool dag_satisfies(const Dag& d, const PairwiseConstraint& c);
bool dag_satisfies(const Dag& d, const Dcc& c);

RestrictedClass restricted_class(const Cpdag& g, const std::vector<PairwiseConstraint>& b,
                                 const OracleOptions& opt = {});
RestrictedClass restricted_class(const Cpdag& g, const DccSet& k, const OracleOptions& opt = {});

// edges oriented the same way in every member; throws ContractError if empty
Mpdag oracle_mpdag(const RestrictedClass& rc);

// one entry per distinct parent set of x among the members
EffectMultiset oracle_effects(const RestrictedClass& rc, Vertex x, Vertex y, const Covariance& cov);

}  // namespace causal_bgk
