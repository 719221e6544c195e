#include "causal_bgk/mpdag_char.hpp"

#include <algorithm>

#include "causal_bgk/chordal.hpp"
#include "causal_bgk/errors.hpp"
#include "causal_bgk/meek.hpp"

namespace causal_bgk {

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::chain_graph: return "i";
        case Condition::chordal: return "ii";
        case Condition::shared_parents: return "iii";
        case Condition::inner_edge: return "iv";
    }
    return "?";
}

std::vector<BComponent> b_components(const Pdag& g) {
    std::vector<BComponent> out;
    for (auto& c : chain_components(g)) out.push_back({c, g.restricted_to(c)});
    return out;
}

namespace {
std::vector<int> component_index(const Pdag& g, const std::vector<VertexSet>& comps) {
    std::vector<int> idx(g.size(), -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (Vertex v : comps[i]) idx[v] = static_cast<int>(i);
    return idx;
}
}  // namespace

Pdag chain_skeleton(const Pdag& g) {
    auto comps = chain_components(g);
    auto idx = component_index(g, comps);
    Pdag out = g;
    for (auto e : g.directed_edges())
        if (idx[e.tail] == idx[e.head]) out.add_undirected(e.tail, e.head);
    return out;
}

CharacterizationReport is_causal_mpdag(const Pdag& g) {
    CharacterizationReport rep;
    auto comps = chain_components(g);
    auto idx = component_index(g, comps);
    const Pdag hc = chain_skeleton(g);
    const int k = static_cast<int>(comps.size());

    // (i) components of the chain skeleton must be ordered acyclically.
    // Plain successor sets: two components may point at each other.
    {
        std::vector<VertexSet> succ(k, VertexSet(k));
        for (auto e : hc.directed_edges()) succ[idx[e.tail]].insert(idx[e.head]);
        auto reach = [&](int from) {
            VertexSet seen(k), frontier(k, {from});
            while (!frontier.empty()) {
                VertexSet next(k);
                for (int c : frontier) next |= succ[c];
                next -= seen;
                seen |= next;
                frontier = next;
            }
            return seen;
        };
        std::vector<Edge> on_cycle;
        for (auto e : hc.directed_edges())
            if (reach(idx[e.head]).contains(idx[e.tail]) || idx[e.head] == idx[e.tail]) on_cycle.push_back(e);
        if (!on_cycle.empty())
            rep.violations.push_back({Condition::chain_graph, {}, on_cycle,
                                      "chain skeleton has a partially directed cycle"});
    }
    for (int c = 0; c < k; ++c) {
        const VertexSet& comp = comps[c];
        // (ii)
        if (!is_chordal(hc.undirected_part(), comp))
            rep.violations.push_back({Condition::chordal, comp.to_vector(), {}, "component skeleton is not chordal"});
        // (iii) parents from outside the component, in the chain skeleton
        Vertex first = comp.first();
        VertexSet ref = hc.parents(first);
        for (Vertex v : comp) {
            if (hc.parents(v) == ref) continue;
            rep.violations.push_back({Condition::shared_parents, {first, v}, {},
                                      "vertices of one component have different parents"});
        }
        // (iv) directed edges inside the component
        for (Vertex a : comp)
            for (Vertex b : g.children(a) & comp) {
                VertexSet pb = g.parents(b);
                pb.erase(a);
                bool ok = g.parents(a).is_subset_of(pb);
                VertexSet adj_b = g.neighbors(b) & comp;
                VertexSet adj_a = g.neighbors(a) & comp;
                adj_b.erase(a);
                adj_a.erase(b);
                ok = ok && adj_b.is_subset_of(adj_a);
                if (!ok)
                    rep.violations.push_back({Condition::inner_edge, {a, b}, {{a, b}},
                                              "edge inside a component fails the parent/adjacency test"});
            }
    }
    rep.is_causal_mpdag = rep.violations.empty();
    return rep;
}

namespace {

bool protected_edge(const Pdag& g, Vertex a, Vertex b) {
    // (a) c -> a -> b, c not adjacent to b
    for (Vertex c : g.parents(a))
        if (!g.adjacent(c, b)) return true;
    // (b) a -> b <- c, c not adjacent to a
    for (Vertex c : g.parents(b))
        if (c != a && !g.adjacent(c, a)) return true;
    // (c) a -> c -> b
    if (g.children(a).intersects(g.parents(b))) return true;
    VertexSet sa = g.siblings(a);
    // (d) a - c1 -> b, a - c2 -> b, c1 and c2 not adjacent
    VertexSet into_b = sa & g.parents(b);
    for (Vertex c1 : into_b)
        for (Vertex c2 : into_b)
            if (c1 < c2 && !g.adjacent(c1, c2)) return true;
    // (e) a - c1 -> c2 -> b, a - c2, c1 not adjacent to b
    for (Vertex c2 : into_b)
        for (Vertex c1 : sa & g.parents(c2))
            if (!g.adjacent(c1, b)) return true;
    return false;
}

void require_causal(const Pdag& g) {
    if (!is_causal_mpdag(g).is_causal_mpdag) throw ContractError("graph is not a causal MPDAG");
}

}  // namespace

std::vector<Edge> m_strongly_protected(const Pdag& g) {
    require_causal(g);
    std::vector<Edge> out;
    for (auto e : g.directed_edges())
        if (protected_edge(g, e.tail, e.head)) out.push_back(e);
    return out;
}

std::vector<Edge> minimal_generator(const Pdag& g) {
    require_causal(g);
    std::vector<Edge> out;
    for (auto e : g.directed_edges())
        if (!protected_edge(g, e.tail, e.head)) out.push_back(e);
    return out;
}

Cpdag cpdag_of(const Pdag& g) {
    require_causal(g);
    Pdag p = g.skeleton();
    for (auto vs : v_structures(g)) {
        p.add_directed(vs.a, vs.b);
        p.add_directed(vs.c, vs.b);
    }
    return Cpdag::trusted(meek_closure(p).graph());
}

}  // namespace causal_bgk
