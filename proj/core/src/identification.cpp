#include "causal_bgk/identification.hpp"

#include <algorithm>

#include "causal_bgk/errors.hpp"
#include "causal_bgk/paths.hpp"

namespace causal_bgk {

void EffectQuery::validate() const {
    if (X.empty() || Y.empty()) throw ContractError("treatment and outcome sets must be nonempty");
    if (X.intersects(Y)) throw ContractError("treatment and outcome sets overlap");
    if (Z && (Z->intersects(X) || Z->intersects(Y)))
        throw ContractError("adjustment set overlaps treatment or outcome");
}

bool is_identifiable(const Pdag& h, const EffectQuery& q) {
    q.validate();
    bool ok = true;
    for_each_proper_possibly_causal_path(h, q.X, q.Y, [&](const Path& p) {
        if (!h.has_directed(p[0], p[1])) ok = false;
        return ok;
    });
    return ok;
}

VertexSet forbidden_set(const Pdag& h, const VertexSet& X, const VertexSet& Y) {
    VertexSet on_paths(h.size());
    for_each_proper_possibly_causal_path(h, X, Y, [&](const Path& p) {
        for (std::size_t i = 1; i < p.size(); ++i) on_paths.insert(p[i]);
        return true;
    });
    if (on_paths.empty()) return on_paths;
    return possible_descendants(h, on_paths);
}

namespace {

bool blocks_all_noncausal(const Pdag& h, const VertexSet& X, const VertexSet& Y, const VertexSet& Z) {
    bool ok = true;
    for_each_proper_path(h, X, Y, [&](const Path& p) {
        if (is_possibly_causal(h, p) || !is_definite_status(h, p)) return true;
        if (!blocked(h, p, Z)) ok = false;
        return ok;
    });
    return ok;
}

}  // namespace

bool satisfies_b_adjustment(const Pdag& h, const EffectQuery& q) {
    q.validate();
    if (!q.Z) throw ContractError("no adjustment set given");
    if (!is_identifiable(h, q)) return false;
    if (q.Z->intersects(forbidden_set(h, q.X, q.Y))) return false;
    return blocks_all_noncausal(h, q.X, q.Y, *q.Z);
}

std::optional<VertexSet> find_adjustment_set(const Pdag& h, const VertexSet& X, const VertexSet& Y,
                                             const AdjustmentSearch& opt) {
    EffectQuery q{X, Y, std::nullopt};
    if (!is_identifiable(h, q)) return std::nullopt;
    VertexSet forb = forbidden_set(h, X, Y);
    VertexSet pool = h.all() - X - Y - forb;
    q.Z = possible_ancestors(h, X | Y) & pool;
    if (blocks_all_noncausal(h, X, Y, *q.Z)) return q.Z;

    if (h.size() > opt.exhaustive_limit)
        throw CapabilityError("no adjustment candidate found and graph too large for subset search");
    auto cand = pool.to_vector();
    const int m = static_cast<int>(cand.size());
    // by size, then in lexicographic order of members
    for (int sz = 0; sz <= m; ++sz) {
        std::vector<bool> mask(m, false);
        std::fill(mask.begin(), mask.begin() + sz, true);
        do {
            VertexSet z(h.size());
            for (int i = 0; i < m; ++i)
                if (mask[i]) z.insert(cand[i]);
            if (blocks_all_noncausal(h, X, Y, z)) return z;
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return std::nullopt;
}

}  // namespace causal_bgk
