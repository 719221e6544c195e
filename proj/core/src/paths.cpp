#include "causal_bgk/paths.hpp"

#include <deque>

#include "causal_bgk/errors.hpp"

namespace causal_bgk {

namespace {

struct Walker {
    const Pdag& g;
    const VertexSet& Y;
    VertexSet blocked_mid;  // X | Y
    bool possibly_causal;
    const PathVisitor& visit;
    Path path;
    VertexSet on_path;
    bool stop = false;

    void extend(Vertex v) {
        for (Vertex w : g.neighbors(v)) {
            if (stop) return;
            if (on_path.contains(w)) continue;
            if (possibly_causal) {
                bool back = false;
                for (Vertex u : path)
                    if (g.has_directed(w, u)) {
                        back = true;
                        break;
                    }
                if (back) continue;
            }
            path.push_back(w);
            if (Y.contains(w)) {
                if (!visit(path)) stop = true;
            } else if (!blocked_mid.contains(w)) {
                on_path.insert(w);
                extend(w);
                on_path.erase(w);
            }
            path.pop_back();
        }
    }
};

void walk(const Pdag& g, const VertexSet& X, const VertexSet& Y, bool pc, const PathVisitor& visit) {
    if (X.intersects(Y)) throw ContractError("treatment and outcome sets overlap");
    Walker w{g, Y, X | Y, pc, visit, {}, VertexSet(g.size())};
    for (Vertex x : X) {
        if (w.stop) return;
        w.path = {x};
        w.on_path = VertexSet(g.size(), {x});
        w.extend(x);
    }
}

}  // namespace

void for_each_proper_path(const Pdag& g, const VertexSet& X, const VertexSet& Y, const PathVisitor& visit) {
    walk(g, X, Y, false, visit);
}

void for_each_proper_possibly_causal_path(const Pdag& g, const VertexSet& X, const VertexSet& Y,
                                          const PathVisitor& visit) {
    walk(g, X, Y, true, visit);
}

std::vector<Path> proper_possibly_causal_paths(const Pdag& g, const VertexSet& X, const VertexSet& Y) {
    std::vector<Path> out;
    for_each_proper_possibly_causal_path(g, X, Y, [&](const Path& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

bool is_possibly_causal(const Pdag& g, const Path& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (g.has_directed(p[j], p[i])) return false;
    return true;
}

bool is_partially_directed(const Pdag& g, const Path& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (g.has_directed(p[i + 1], p[i]) || !g.adjacent(p[i], p[i + 1])) return false;
    return true;
}

NodeStatus node_status(const Pdag& g, Vertex a, Vertex b, Vertex c) {
    if (g.has_directed(a, b) && g.has_directed(c, b)) return NodeStatus::collider;
    if (g.has_directed(b, a) || g.has_directed(b, c)) return NodeStatus::definite_non_collider;
    if (g.has_undirected(a, b) && g.has_undirected(b, c) && !g.adjacent(a, c))
        return NodeStatus::definite_non_collider;
    return NodeStatus::indefinite;
}

bool is_definite_status(const Pdag& g, const Path& p) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (node_status(g, p[i - 1], p[i], p[i + 1]) == NodeStatus::indefinite) return false;
    return true;
}

bool blocked(const Pdag& g, const Path& p, const VertexSet& Z) {
    if (p.empty()) throw ContractError("empty path");
    if (Z.contains(p.front()) || Z.contains(p.back())) throw ContractError("path endpoint in conditioning set");
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        auto s = node_status(g, p[i - 1], p[i], p[i + 1]);
        if (s == NodeStatus::indefinite) throw ContractError("path is not of definite status");
        if (s == NodeStatus::definite_non_collider) {
            if (Z.contains(p[i])) return true;
        } else {
            VertexSet de = descendants(g, VertexSet(g.size(), {p[i]}));
            if (!de.intersects(Z)) return true;
        }
    }
    return false;
}

namespace {
VertexSet possible_reach(const Pdag& g, const VertexSet& s, bool forward) {
    VertexSet seen = s;
    std::deque<Vertex> q(s.begin(), s.end());
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        VertexSet next = g.siblings(v) | (forward ? g.children(v) : g.parents(v));
        for (Vertex w : next)
            if (!seen.contains(w)) {
                seen.insert(w);
                q.push_back(w);
            }
    }
    return seen;
}
}  // namespace

VertexSet possible_descendants(const Pdag& g, const VertexSet& S) { return possible_reach(g, S, true); }
VertexSet possible_ancestors(const Pdag& g, const VertexSet& S) { return possible_reach(g, S, false); }

}  // namespace causal_bgk
