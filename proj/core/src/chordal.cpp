#include "causal_bgk/chordal.hpp"

#include "causal_bgk/errors.hpp"

namespace causal_bgk {

bool is_simplicial(const Pdag& g, Vertex v, const VertexSet& within) {
    VertexSet nb = g.siblings(v) & within;
    for (Vertex a : nb)
        for (Vertex b : nb)
            if (a < b && !g.has_undirected(a, b)) return false;
    return true;
}

// maximum cardinality search, then check the reverse order is a perfect
// elimination ordering
bool is_chordal(const Pdag& g, const VertexSet& within) {
    const int n = g.size();
    for (Vertex v : within)
        if (g.children(v).intersects(within)) throw ContractError("chordality is defined for undirected graphs only");
    std::vector<int> weight(n, 0);
    std::vector<int> pos(n, -1);
    std::vector<Vertex> order;
    VertexSet left = within;
    while (!left.empty()) {
        Vertex best = -1;
        for (Vertex v : left)
            if (best < 0 || weight[v] > weight[best]) best = v;
        left.erase(best);
        pos[best] = static_cast<int>(order.size());
        order.push_back(best);
        for (Vertex w : g.siblings(best) & left) ++weight[w];
    }
    // order is a reverse elimination ordering: for each v, its neighbours
    // visited earlier must form a clique. Standard test: the latest earlier
    // neighbour u must be adjacent to all other earlier neighbours.
    for (Vertex v : order) {
        VertexSet earlier(n);
        Vertex u = -1;
        for (Vertex w : g.siblings(v) & within)
            if (pos[w] < pos[v]) {
                earlier.insert(w);
                if (u < 0 || pos[w] > pos[u]) u = w;
            }
        if (u < 0) continue;
        for (Vertex w : earlier)
            if (w != u && !g.has_undirected(u, w)) return false;
    }
    return true;
}

bool is_chordal(const Pdag& g) { return is_chordal(g, g.all()); }

std::vector<Vertex> perfect_elimination_ordering(const Pdag& g, const VertexSet& within) {
    std::vector<Vertex> out;
    VertexSet left = within;
    while (!left.empty()) {
        Vertex pick = -1;
        for (Vertex v : left)
            if (is_simplicial(g, v, left)) {
                pick = v;
                break;
            }
        if (pick < 0) throw ContractError("undirected part is not chordal");
        out.push_back(pick);
        left.erase(pick);
    }
    return out;
}

std::vector<Vertex> perfect_elimination_ordering(const Pdag& g) {
    return perfect_elimination_ordering(g, g.all());
}

Pdag orient_by_ordering(const Pdag& g, const std::vector<Vertex>& order) {
    std::vector<int> pos(g.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    Pdag out = g;
    for (auto e : g.undirected_edges()) {
        if (pos[e.tail] < 0 || pos[e.head] < 0) continue;
        if (pos[e.tail] > pos[e.head])
            out.add_directed(e.tail, e.head);
        else
            out.add_directed(e.head, e.tail);
    }
    return out;
}

}  // namespace causal_bgk
