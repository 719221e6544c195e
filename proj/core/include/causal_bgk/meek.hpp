#pragma once

#include <optional>
#include <vector>

#include "causal_bgk/graph.hpp"

namespace causal_bgk {

enum class ScanOrder { ascending, descending };

// Closure under the four orientation rules. Throws InconsistentError if the
// input has a directed cycle or the rules try to orient an edge both ways.
// The result does not depend on `order`; it only changes which rule fires
// first and is there so tests can check that.
Mpdag meek_closure(const Pdag& g, ScanOrder order = ScanOrder::ascending);

struct VStructure {
    Vertex a, b, c;  // a -> b <- c, a < c, a and c not adjacent
    friend bool operator==(const VStructure&, const VStructure&) = default;
    friend auto operator<=>(const VStructure&, const VStructure&) = default;
};

std::vector<VStructure> v_structures(const Pdag& g);

// DAG with g's skeleton and v-structures that keeps every directed edge of g,
// or nullopt. Sink elimination, lowest id first.
std::optional<Dag> consistent_extension(const Pdag& g);

Cpdag dag_to_cpdag(const Dag& d);
bool markov_equivalent(const Dag& a, const Dag& b);

}  // namespace causal_bgk
