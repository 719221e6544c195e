#pragma once

#include <vector>

#include "causal_bgk/dcc.hpp"

namespace causal_bgk::detail {

// Potential-leaf-node elimination state. Clauses are taken as given (callers
// reduce first); a clause is active while its tail and all heads remain.
class LeafEliminator {
public:
    LeafEliminator(const Pdag& g, const DccSet& reduced, const VertexSet& u);

    bool is_leaf(Vertex v) const;
    // lowest-id potential leaf node other than skip, or -1
    Vertex lowest_leaf(Vertex skip = -1) const;
    void remove(Vertex v);
    const VertexSet& remaining() const noexcept { return u_; }

private:
    const Pdag& g_;
    DccSet clauses_;
    std::vector<char> alive_;
    std::vector<int> tail_count_;
    std::vector<std::vector<int>> by_head_;
    VertexSet u_;
};

}  // namespace causal_bgk::detail
