#include "causal_bgk/graph.hpp"

#include <algorithm>
#include <deque>

#include "causal_bgk/chordal.hpp"
#include "causal_bgk/errors.hpp"
#include "causal_bgk/meek.hpp"

namespace causal_bgk {

Pdag::Pdag(std::vector<std::string> labels)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      m_(static_cast<std::size_t>(n_) * n_, 0),
      pa_(n_, VertexSet(n_)),
      ch_(n_, VertexSet(n_)),
      sib_(n_, VertexSet(n_)) {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ContractError("duplicate vertex label");
}

Pdag Pdag::with_size(int n) {
    std::vector<std::string> l;
    l.reserve(n);
    for (int i = 0; i < n; ++i) l.push_back("V" + std::to_string(i));
    return Pdag(std::move(l));
}

std::optional<Vertex> Pdag::find(std::string_view label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

Vertex Pdag::vertex(std::string_view label) const {
    auto v = find(label);
    if (!v) throw ContractError("unknown vertex '" + std::string(label) + "'");
    return *v;
}

void Pdag::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw ContractError("vertex id out of range: " + std::to_string(v));
}

void Pdag::set_pair(Vertex a, Vertex b, Mark ab) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw ContractError("self loop on " + labels_[a]);
    pa_[a].erase(b); ch_[a].erase(b); sib_[a].erase(b);
    pa_[b].erase(a); ch_[b].erase(a); sib_[b].erase(a);
    Mark ba = Mark::none;
    switch (ab) {
        case Mark::out: ba = Mark::in; ch_[a].insert(b); pa_[b].insert(a); break;
        case Mark::in: ba = Mark::out; pa_[a].insert(b); ch_[b].insert(a); break;
        case Mark::undirected: ba = Mark::undirected; sib_[a].insert(b); sib_[b].insert(a); break;
        case Mark::none: break;
    }
    m_[idx(a, b)] = static_cast<std::uint8_t>(ab);
    m_[idx(b, a)] = static_cast<std::uint8_t>(ba);
}

void Pdag::add_directed(Vertex a, Vertex b) { set_pair(a, b, Mark::out); }
void Pdag::add_undirected(Vertex a, Vertex b) { set_pair(a, b, Mark::undirected); }
void Pdag::remove_edge(Vertex a, Vertex b) { set_pair(a, b, Mark::none); }

VertexSet Pdag::parents(const VertexSet& s) const {
    VertexSet r(n_);
    for (Vertex v : s) r |= pa_[v];
    return r;
}
VertexSet Pdag::children(const VertexSet& s) const {
    VertexSet r(n_);
    for (Vertex v : s) r |= ch_[v];
    return r;
}
VertexSet Pdag::siblings(const VertexSet& s) const {
    VertexSet r(n_);
    for (Vertex v : s) r |= sib_[v];
    return r;
}

std::vector<Edge> Pdag::directed_edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < n_; ++a)
        for (Vertex b : ch_[a]) out.push_back({a, b});
    return out;
}

std::vector<Edge> Pdag::undirected_edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < n_; ++a)
        for (Vertex b : sib_[a])
            if (a < b) out.push_back({a, b});
    return out;
}

int Pdag::edge_count() const {
    int c = 0;
    for (int a = 0; a < n_; ++a) c += ch_[a].size() + sib_[a].size();
    return c - static_cast<int>(undirected_edges().size());
}

bool Pdag::has_undirected_edges() const {
    for (int a = 0; a < n_; ++a)
        if (!sib_[a].empty()) return true;
    return false;
}

Pdag Pdag::restricted_to(const VertexSet& s) const {
    Pdag r(labels_);
    for (Vertex a : s)
        for (Vertex b : s)
            if (a < b && adjacent(a, b)) r.set_pair(a, b, mark(a, b));
    return r;
}

Pdag Pdag::undirected_part() const {
    Pdag r(labels_);
    for (auto e : undirected_edges()) r.add_undirected(e.tail, e.head);
    return r;
}

Pdag Pdag::skeleton() const {
    Pdag r(labels_);
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (adjacent(a, b)) r.add_undirected(a, b);
    return r;
}

std::vector<Vertex> topological_order(const Pdag& g) {
    const int n = g.size();
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = g.parents(v).size();
    std::vector<Vertex> order;
    order.reserve(n);
    // lowest id first among ready vertices
    VertexSet ready(n);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.insert(v);
    while (!ready.empty()) {
        Vertex v = ready.first();
        ready.erase(v);
        order.push_back(v);
        for (Vertex c : g.children(v))
            if (--indeg[c] == 0) ready.insert(c);
    }
    if (static_cast<int>(order.size()) != n) throw InconsistentError("directed cycle");
    return order;
}

bool has_directed_cycle(const Pdag& g) {
    try {
        topological_order(g);
        return false;
    } catch (const InconsistentError&) {
        return true;
    }
}

namespace {
VertexSet reach(const Pdag& g, const VertexSet& s, bool forward) {
    VertexSet seen = s;
    std::deque<Vertex> q(s.begin(), s.end());
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (Vertex w : forward ? g.children(v) : g.parents(v))
            if (!seen.contains(w)) {
                seen.insert(w);
                q.push_back(w);
            }
    }
    return seen;
}
}  // namespace

VertexSet descendants(const Pdag& g, const VertexSet& s) { return reach(g, s, true); }
VertexSet ancestors(const Pdag& g, const VertexSet& s) { return reach(g, s, false); }

std::vector<VertexSet> chain_components(const Pdag& g) {
    const int n = g.size();
    std::vector<VertexSet> out;
    VertexSet seen(n);
    for (int v = 0; v < n; ++v) {
        if (seen.contains(v)) continue;
        VertexSet comp(n);
        comp.insert(v);
        seen.insert(v);
        std::deque<Vertex> q{v};
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : g.siblings(u))
                if (!seen.contains(w)) {
                    seen.insert(w);
                    comp.insert(w);
                    q.push_back(w);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

Dag Dag::from(Pdag g) {
    if (g.has_undirected_edges()) throw ContractError("DAG contains an undirected edge");
    if (has_directed_cycle(g)) throw ContractError("DAG contains a directed cycle");
    return Dag(std::move(g));
}

Cpdag Cpdag::from(Pdag g) {
    if (has_directed_cycle(g)) throw ContractError("CPDAG contains a directed cycle");
    auto ext = consistent_extension(g);
    if (!ext) throw ContractError("graph has no consistent DAG extension");
    if (!(dag_to_cpdag(*ext).graph() == g)) throw ContractError("graph is not a CPDAG");
    return Cpdag(std::move(g));
}

Mpdag Mpdag::from(Pdag g) {
    if (has_directed_cycle(g)) throw ContractError("MPDAG contains a directed cycle");
    Mpdag closed = meek_closure(g);
    if (!(closed.graph() == g)) throw ContractError("graph is not closed under the orientation rules");
    return Mpdag(std::move(g));
}

std::string format_set(const Pdag& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    }
    return out + "}";
}

std::string format_edge(const Pdag& g, const Edge& e) {
    return g.label(e.tail) + "->" + g.label(e.head);
}

}  // namespace causal_bgk
