#include "causal_bgk/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "causal_bgk/chordal.hpp"
#include "causal_bgk/errors.hpp"

namespace causal_bgk {

namespace {

// Orientations of one chain component without v-structures or cycles, i.e.
// all ways of peeling simplicial vertices off as sinks. Memoized on the set
// of vertices still present so each orientation is produced once.
// An orientation is a bitmask over the component's edges: bit set means the
// edge points from its lower id to its higher id.
class ComponentOrienter {
public:
    ComponentOrienter(const Pdag& g, const VertexSet& comp) : g_(g) {
        for (Vertex a : comp)
            for (Vertex b : g.siblings(a) & comp)
                if (a < b) edges_.push_back({a, b});
        if (edges_.size() > 64) throw CapabilityError("chain component too dense for the oracle");
    }

    const std::vector<std::uint64_t>& run(const VertexSet& left) {
        auto key = left.low_word();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<std::uint64_t> out;
        if (left.size() <= 1) {
            out.push_back(0);
        } else {
            for (Vertex v : left) {
                if (!is_simplicial(g_, v, left)) continue;
                VertexSet rest = left;
                rest.erase(v);
                std::uint64_t bits = 0;
                for (std::size_t i = 0; i < edges_.size(); ++i) {
                    auto [a, b] = edges_[i];
                    // w -> v where w is the other end
                    if (b == v && rest.contains(a)) bits |= std::uint64_t{1} << i;
                }
                for (auto o : run(rest)) out.push_back(o | bits);
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    std::vector<Edge> decode(std::uint64_t o) const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [a, b] = edges_[i];
            out.push_back(o >> i & 1 ? Edge{a, b} : Edge{b, a});
        }
        return out;
    }

private:
    const Pdag& g_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> memo_;
};

}  // namespace

std::vector<Dag> enumerate_class(const Cpdag& cg, const OracleOptions& opt) {
    const Pdag& g = cg.graph();
    std::vector<std::vector<std::vector<Edge>>> per_comp;
    for (auto& comp : chain_components(g)) {
        if (comp.size() == 1) continue;
        if (comp.size() > opt.max_component || g.size() > 64)
            throw CapabilityError("chain component of size " + std::to_string(comp.size()) + " exceeds oracle cap");
        ComponentOrienter co(g, comp);
        std::vector<std::vector<Edge>> all;
        for (auto o : co.run(comp)) all.push_back(co.decode(o));
        per_comp.push_back(std::move(all));
    }
    Pdag base(g.labels());
    for (auto e : g.directed_edges()) base.add_directed(e.tail, e.head);
    std::vector<Dag> out;
    std::vector<std::size_t> pick(per_comp.size(), 0);
    while (true) {
        Pdag d = base;
        for (std::size_t i = 0; i < per_comp.size(); ++i)
            for (auto e : per_comp[i][pick[i]]) d.add_directed(e.tail, e.head);
        out.push_back(Dag::trusted(std::move(d)));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per_comp[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

bool dag_satisfies(const Dag& d, const PairwiseConstraint& c) {
    const Pdag& g = d.graph();
    switch (c.kind) {
        case ConstraintKind::direct: return g.has_directed(c.tail, c.head);
        case ConstraintKind::ancestral: return ancestors(g, VertexSet(g.size(), {c.head})).contains(c.tail);
        case ConstraintKind::non_ancestral: return !ancestors(g, VertexSet(g.size(), {c.head})).contains(c.tail);
    }
    return false;
}

bool dag_satisfies(const Dag& d, const Dcc& c) { return c.heads.intersects(d.graph().children(c.tail)); }

namespace {
template <class C>
RestrictedClass filter_class(const Cpdag& g, const std::vector<C>& cs, const OracleOptions& opt) {
    RestrictedClass rc{g, {}};
    for (auto& d : enumerate_class(g, opt)) {
        bool ok = true;
        for (const auto& c : cs)
            if (!dag_satisfies(d, c)) {
                ok = false;
                break;
            }
        if (ok) rc.members.push_back(std::move(d));
    }
    return rc;
}
}  // namespace

RestrictedClass restricted_class(const Cpdag& g, const std::vector<PairwiseConstraint>& b, const OracleOptions& opt) {
    return filter_class(g, b, opt);
}

RestrictedClass restricted_class(const Cpdag& g, const DccSet& k, const OracleOptions& opt) {
    return filter_class(g, k, opt);
}

Mpdag oracle_mpdag(const RestrictedClass& rc) {
    if (rc.members.empty()) throw ContractError("empty restricted class");
    const Pdag& first = rc.members.front().graph();
    Pdag out = rc.base.graph().skeleton();
    for (auto e : first.directed_edges()) {
        bool common = true;
        for (const auto& d : rc.members)
            if (!d.graph().has_directed(e.tail, e.head)) {
                common = false;
                break;
            }
        if (common) out.add_directed(e.tail, e.head);
    }
    return Mpdag::trusted(std::move(out));
}

EffectMultiset oracle_effects(const RestrictedClass& rc, Vertex x, Vertex y, const Covariance& cov) {
    EffectMultiset out;
    std::set<VertexSet> seen;
    for (const auto& d : rc.members) {
        const VertexSet& pa = d.graph().parents(x);
        if (!seen.insert(pa).second) continue;
        out.push_back({adjusted_effect(cov, x, y, pa), pa});
    }
    return out;
}

}  // namespace causal_bgk
