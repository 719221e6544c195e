#include "causal_bgk/decomposition.hpp"

#include "causal_bgk/errors.hpp"
#include "causal_bgk/meek.hpp"
#include "leaf_elimination.hpp"

namespace causal_bgk {

namespace {

void require_consistent(const Pdag& g, const DccSet& k) {
    VertexSet left = elimination_residue(g, k);
    if (!left.empty())
        throw InconsistentError("knowledge is inconsistent with the graph; stuck on " + format_set(g, left),
                                left.to_vector());
}

VertexSet chain_component_of(const Pdag& g, Vertex x) {
    for (auto& c : chain_components(g))
        if (c.contains(x)) return c;
    return VertexSet(g.size(), {x});
}

VertexSet moc_vertices(const Pdag& g, const DccSet& reduced, Vertex x) {
    detail::LeafEliminator e(g, reduced, chain_component_of(g, x));
    for (Vertex v = e.lowest_leaf(x); v >= 0; v = e.lowest_leaf(x)) e.remove(v);
    return e.remaining();
}

DccSet edges_as_clauses(const Pdag& h) {
    DccSet out;
    for (auto e : h.directed_edges()) out.push_back({e.tail, VertexSet(h.size(), {e.head})});
    return out;
}

}  // namespace

OrientationComponent maximal_orientation_component(const Cpdag& g, const DccSet& k, Vertex x) {
    require_consistent(g, k);
    VertexSet m = moc_vertices(g, reduced_form(g, k), x);
    return {m, x, g.graph().restricted_to(m).undirected_part()};
}

Mpdag construct_mpdag(const Cpdag& cg, const DccSet& k) {
    const Pdag& g = cg.graph();
    require_consistent(g, k);
    DccSet red = reduced_form(g, k);
    Pdag h = g;
    for (Vertex y = 0; y < g.size(); ++y) {
        if (g.siblings(y).empty()) continue;
        VertexSet m = moc_vertices(g, red, y);
        for (Vertex w : g.siblings(y) & m) h.add_directed(w, y);
    }
    return meek_closure(h);
}

DccSet minimal_residual(const Cpdag& g, const DccSet& k, const Mpdag& h) {
    const DccSet base = edges_as_clauses(h);
    DccSet kept = k;
    // one pass is enough: dropping clauses never makes a kept one redundant
    for (std::size_t i = 0; i < kept.size();) {
        DccSet probe = base;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) probe.push_back(kept[j]);
        for (auto& c : negation(g, kept[i])) probe.push_back(c);
        if (check_consistency(g, probe))
            ++i;
        else
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return kept;
}

DccSet minimal_residual(const Cpdag& g, const DccSet& k) {
    return minimal_residual(g, k, construct_mpdag(g, k));
}

Decomposition decompose(const Cpdag& g, const DccSet& k) {
    Mpdag h = construct_mpdag(g, k);
    DccSet r = minimal_residual(g, k, h);
    return {std::move(h), std::move(r), k};
}

Decomposition decompose(const Cpdag& g, const std::vector<PairwiseConstraint>& b) {
    return decompose(g, constraints_to_dccs(g, b));
}

bool is_fully_informative(const Cpdag&, const DccSet& k, const Mpdag& mh) {
    const Pdag& h = mh.graph();
    for (const auto& c : k) {
        if (c.heads.intersects(h.children(c.tail))) continue;
        VertexSet s = c.heads & h.siblings(c.tail);
        bool complete = true;
        for (Vertex a : s)
            for (Vertex b : s)
                if (a < b && !h.adjacent(a, b)) complete = false;
        if (complete) return false;
    }
    return true;
}

}  // namespace causal_bgk
