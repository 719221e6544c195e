#include "causal_bgk/meek.hpp"

#include <algorithm>
#include <deque>

#include "causal_bgk/errors.hpp"

namespace causal_bgk {

namespace {

// would one of the four rules orient the undirected edge x - y as x -> y
bool forced(const Pdag& g, Vertex x, Vertex y) {
    // R1: a -> x - y, a and y not adjacent
    for (Vertex a : g.parents(x))
        if (!g.adjacent(a, y)) return true;
    // R2: x -> b -> y
    if (g.children(x).intersects(g.parents(y))) return true;
    // R3: x - c1 -> y, x - c2 -> y, c1 and c2 not adjacent
    VertexSet c = g.siblings(x) & g.parents(y);
    for (Vertex c1 : c)
        for (Vertex c2 : c)
            if (c1 < c2 && !g.adjacent(c1, c2)) return true;
    // R4: x - k -> l -> y, l adjacent to x, k and y not adjacent
    for (Vertex k : g.siblings(x)) {
        if (g.adjacent(k, y)) continue;
        for (Vertex l : g.children(k) & g.parents(y))
            if (g.adjacent(l, x)) return true;
    }
    return false;
}

}  // namespace

Mpdag meek_closure(const Pdag& in, ScanOrder order) {
    if (has_directed_cycle(in)) throw InconsistentError("directed cycle in input");
    Pdag g = in;
    const int n = g.size();
    std::vector<char> queued(n, 1);
    std::deque<Vertex> work;
    for (int i = 0; i < n; ++i) work.push_back(order == ScanOrder::ascending ? i : n - 1 - i);
    auto push = [&](Vertex v) {
        if (!queued[v]) {
            queued[v] = 1;
            work.push_back(v);
        }
    };
    while (!work.empty()) {
        Vertex v = work.front();
        work.pop_front();
        queued[v] = 0;
        auto sibs = g.siblings(v).to_vector();
        if (order == ScanOrder::descending) std::reverse(sibs.begin(), sibs.end());
        for (Vertex w : sibs) {
            if (!g.has_undirected(v, w)) continue;
            bool vw = forced(g, v, w);
            bool wv = forced(g, w, v);
            if (vw && wv)
                throw InconsistentError("edge " + g.label(v) + " - " + g.label(w) + " forced both ways",
                                        {v, w});
            if (!vw && !wv) continue;
            Vertex a = vw ? v : w, b = vw ? w : v;
            g.add_directed(a, b);
            push(a);
            push(b);
            for (Vertex u : g.neighbors(a)) push(u);
            for (Vertex u : g.neighbors(b)) push(u);
        }
    }
    if (has_directed_cycle(g)) throw InconsistentError("orientation rules produced a directed cycle");
    return Mpdag::trusted(std::move(g));
}

std::vector<VStructure> v_structures(const Pdag& g) {
    std::vector<VStructure> out;
    for (int b = 0; b < g.size(); ++b) {
        const auto& pa = g.parents(b);
        for (Vertex a : pa)
            for (Vertex c : pa)
                if (a < c && !g.adjacent(a, c)) out.push_back({a, b, c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Dag> consistent_extension(const Pdag& in) {
    if (has_directed_cycle(in)) return std::nullopt;
    Pdag g = in;    // shrinking working copy
    Pdag out = in;  // gets oriented as we go
    VertexSet left = in.all();
    while (!left.empty()) {
        Vertex pick = -1;
        for (Vertex x : left) {
            if (!(g.children(x) & left).empty()) continue;
            VertexSet sib = g.siblings(x) & left;
            VertexSet adj = g.neighbors(x) & left;
            bool ok = true;
            for (Vertex y : sib) {
                for (Vertex z : adj)
                    if (z != y && !g.adjacent(y, z)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) {
                pick = x;
                break;
            }
        }
        if (pick < 0) return std::nullopt;
        for (Vertex y : g.siblings(pick) & left) out.add_directed(y, pick);
        left.erase(pick);
    }
    return Dag::trusted(std::move(out));
}

Cpdag dag_to_cpdag(const Dag& d) {
    const Pdag& g = d.graph();
    Pdag p = g.skeleton();
    for (auto vs : v_structures(g)) {
        p.add_directed(vs.a, vs.b);
        p.add_directed(vs.c, vs.b);
    }
    return Cpdag::trusted(meek_closure(p).graph());
}

bool markov_equivalent(const Dag& a, const Dag& b) {
    return a.graph().skeleton() == b.graph().skeleton() && v_structures(a) == v_structures(b);
}

}  // namespace causal_bgk
