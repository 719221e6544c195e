#include "causal_bgk/dcc.hpp"

#include <deque>
#include <set>
#include <tuple>

#include "causal_bgk/chordal.hpp"
#include "causal_bgk/decomposition.hpp"
#include "causal_bgk/errors.hpp"
#include "leaf_elimination.hpp"

namespace causal_bgk {

namespace detail {

LeafEliminator::LeafEliminator(const Pdag& g, const DccSet& reduced, const VertexSet& u)
    : g_(g), tail_count_(g.size(), 0), by_head_(g.size()), u_(u) {
    for (const auto& c : reduced) {
        if (!u_.contains(c.tail) || !c.heads.is_subset_of(u_)) continue;
        int id = static_cast<int>(clauses_.size());
        clauses_.push_back(c);
        alive_.push_back(1);
        ++tail_count_[c.tail];
        for (Vertex h : c.heads) by_head_[h].push_back(id);
    }
}

bool LeafEliminator::is_leaf(Vertex v) const {
    return u_.contains(v) && tail_count_[v] == 0 && is_simplicial(g_, v, u_);
}

Vertex LeafEliminator::lowest_leaf(Vertex skip) const {
    for (Vertex v : u_)
        if (v != skip && is_leaf(v)) return v;
    return -1;
}

void LeafEliminator::remove(Vertex v) {
    u_.erase(v);
    for (int id : by_head_[v])
        if (alive_[id]) {
            alive_[id] = 0;
            --tail_count_[clauses_[id].tail];
        }
}

}  // namespace detail

Dcc make_dcc(const Pdag& g, Vertex tail, std::initializer_list<Vertex> heads) {
    Dcc c{tail, VertexSet(g.size(), heads)};
    if (c.heads.contains(tail)) throw ContractError("clause tail among its heads");
    return c;
}

std::string format_dcc(const Pdag& g, const Dcc& c) {
    return g.label(c.tail) + " => " + format_set(g, c.heads);
}

std::string format_constraint(const Pdag& g, const PairwiseConstraint& c) {
    const char* op = c.kind == ConstraintKind::direct ? " -> " : c.kind == ConstraintKind::ancestral ? " ~> " : " !~> ";
    return g.label(c.tail) + op + g.label(c.head);
}

VertexSet critical_set(const Pdag& g, Vertex x, Vertex y) {
    if (x == y) throw ContractError("critical set of a vertex with respect to itself");
    const int n = g.size();
    VertexSet out(n);
    // any longer path from x to y would have the chord x-y
    if (g.adjacent(x, y)) {
        if (!g.has_directed(y, x)) out.insert(y);
        return out;
    }
    for (Vertex f : g.children(x) | g.siblings(x)) {
        // walk forward along - and -> edges, never closing a triangle with
        // the previous vertex. Unshielded partially directed paths in a
        // closed graph are chordless, so this local test is enough.
        std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
        std::deque<std::pair<Vertex, Vertex>> q{{x, f}};
        seen[static_cast<std::size_t>(x) * n + f] = 1;
        bool hit = false;
        while (!q.empty() && !hit) {
            auto [prev, cur] = q.front();
            q.pop_front();
            for (Vertex w : g.children(cur) | g.siblings(cur)) {
                // a chord back to x would make another neighbour the first hop
                if (w == x || w == prev || g.adjacent(w, prev) || g.adjacent(w, x)) continue;
                if (w == y) {
                    hit = true;
                    break;
                }
                auto& s = seen[static_cast<std::size_t>(cur) * n + w];
                if (!s) {
                    s = 1;
                    q.emplace_back(cur, w);
                }
            }
        }
        if (hit) out.insert(f);
    }
    return out;
}

DccSet constraints_to_dccs(const Pdag& g, const std::vector<PairwiseConstraint>& b) {
    const int n = g.size();
    DccSet out;
    for (const auto& c : b) {
        if (c.tail == c.head) throw ContractError("constraint between a vertex and itself");
        switch (c.kind) {
            case ConstraintKind::direct:
                out.push_back({c.tail, VertexSet(n, {c.head})});
                break;
            case ConstraintKind::ancestral:
                out.push_back({c.tail, critical_set(g, c.tail, c.head)});
                break;
            case ConstraintKind::non_ancestral:
                for (Vertex w : critical_set(g, c.tail, c.head)) out.push_back({w, VertexSet(n, {c.tail})});
                break;
        }
    }
    return out;
}

std::vector<PairwiseConstraint> tiered_to_direct(const Pdag& g, const std::vector<VertexSet>& tiers) {
    VertexSet seen(g.size());
    for (const auto& t : tiers) {
        if (t.intersects(seen)) throw ContractError("tiers overlap");
        seen |= t;
    }
    if (!(seen == g.all())) throw ContractError("tiers do not cover every vertex");
    std::vector<PairwiseConstraint> out;
    for (std::size_t i = 0; i < tiers.size(); ++i)
        for (std::size_t j = i + 1; j < tiers.size(); ++j)
            for (Vertex a : tiers[i])
                for (Vertex b : tiers[j])
                    if (g.adjacent(a, b)) out.push_back({ConstraintKind::direct, a, b});
    return out;
}

DccSet reduced_form(const Pdag& g, const DccSet& k) {
    DccSet out;
    for (const auto& c : k) {
        if (c.heads.intersects(g.children(c.tail))) continue;
        Dcc r{c.tail, c.heads & g.siblings(c.tail)};
        bool dup = false;
        for (const auto& o : out)
            if (o == r) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(r));
    }
    return out;
}

DccSet restriction(const Pdag& g, const DccSet& k, const VertexSet& u) {
    for (Vertex a : u)
        if ((g.children(a) & u).size() > 0)
            throw ContractError("restriction set induces a directed edge");
    DccSet out;
    for (auto& c : reduced_form(g, k))
        if (u.contains(c.tail) && c.heads.is_subset_of(u)) out.push_back(c);
    return out;
}

VertexSet potential_leaf_nodes(const Pdag& g, const DccSet& k, const VertexSet& u) {
    detail::LeafEliminator e(g, restriction(g, k, u), u);
    VertexSet out(g.size());
    for (Vertex v : u)
        if (e.is_leaf(v)) out.insert(v);
    return out;
}

VertexSet elimination_residue(const Pdag& g, const DccSet& k) {
    detail::LeafEliminator e(g, reduced_form(g, k), g.all());
    for (Vertex v = e.lowest_leaf(); v >= 0; v = e.lowest_leaf()) e.remove(v);
    return e.remaining();
}

bool check_consistency(const Pdag& g, const DccSet& k) { return elimination_residue(g, k).empty(); }

DccSet negation(const Pdag& g, const Dcc& c) {
    DccSet out;
    for (Vertex d : c.heads)
        if (g.adjacent(d, c.tail)) out.push_back({d, VertexSet(g.size(), {c.tail})});
    return out;
}

namespace {
DccSet concat(const DccSet& a, const DccSet& b) {
    DccSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// every clause of `from` holds throughout [g, other]
bool implied_by(const Pdag& g, const DccSet& from, const DccSet& other) {
    for (const auto& c : from)
        if (check_consistency(g, concat(negation(g, c), other))) return false;
    return true;
}
}  // namespace

bool check_equivalency(const Pdag& g, const DccSet& k1, const DccSet& k2) {
    bool c1 = check_consistency(g, k1);
    bool c2 = check_consistency(g, k2);
    if (c1 != c2) return false;
    if (!c1) return true;
    return implied_by(g, k1, k2) && implied_by(g, k2, k1);
}

bool is_redundant(const Pdag& g, const DccSet& k, const Dcc& c) {
    if (!check_consistency(g, k)) throw InconsistentError("knowledge is inconsistent with the graph");
    return !check_consistency(g, concat(negation(g, c), k));
}

KnowledgeSession KnowledgeSession::start(const Cpdag& g) {
    return KnowledgeSession{g, {}, Mpdag::trusted(g.graph())};
}

SessionResult session_add(const KnowledgeSession& s, const Dcc& c) {
    const Pdag& h = s.current.graph();
    if (!c.heads.intersects(h.children(c.tail) | h.siblings(c.tail)))
        return SessionRejection{c, c.heads & h.parents(c.tail)};
    KnowledgeSession next{s.base, s.accepted, s.current};
    next.accepted.push_back(c);
    next.current = construct_mpdag(s.base, next.accepted);
    return next;
}

}  // namespace causal_bgk
