#include "causal_bgk/effects.hpp"

#include <cmath>

#include "causal_bgk/decomposition.hpp"
#include "causal_bgk/errors.hpp"

namespace causal_bgk {

Covariance::Covariance(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw NumericalError("covariance matrix is not square");
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = i + 1; j < m_.cols(); ++j)
            if (std::abs(m_(i, j) - m_(j, i)) > 1e-12) throw NumericalError("covariance matrix is not symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(m_);
    if (llt.info() != Eigen::Success) throw NumericalError("covariance matrix is not positive definite");
}

double adjusted_effect(const Covariance& cov, Vertex x, Vertex y, const VertexSet& Z) {
    if (x == y) throw ContractError("treatment equals outcome");
    if (Z.contains(x)) throw ContractError("treatment inside adjustment set");
    if (Z.contains(y)) return 0.0;
    std::vector<int> a{x};
    for (Vertex z : Z) a.push_back(z);
    const int k = static_cast<int>(a.size());
    Eigen::MatrixXd saa(k, k);
    Eigen::VectorXd say(k);
    for (int i = 0; i < k; ++i) {
        say(i) = cov(a[i], y);
        for (int j = 0; j < k; ++j) saa(i, j) = cov(a[i], a[j]);
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(saa);
    if (ldlt.info() != Eigen::Success || ldlt.rcond() < 1e-14)
        throw NumericalError("singular regression system");
    Eigen::VectorXd beta = ldlt.solve(say);
    return beta(0);
}

bool local_parent_validity(const Pdag& g, const DccSet& k, const Pdag& h, Vertex x, const VertexSet& S) {
    if (!S.is_subset_of(h.siblings(x))) throw ContractError("candidate set is not among the undetermined neighbours");
    const int n = g.size();
    // the neighbourhood of x in its chain component, x included
    VertexSet u = g.siblings(x);
    u.insert(x);
    DccSet all = k;
    for (Vertex p : h.parents(x) | S) all.push_back({p, VertexSet(n, {x})});
    for (Vertex c : (h.siblings(x) - S) | h.children(x)) all.push_back({x, VertexSet(n, {c})});
    return check_consistency(g.restricted_to(u), restriction(g, all, u));
}

EffectMultiset bgk_ida(const Cpdag& g, const DccSet& k, const Mpdag& mh, Vertex x, Vertex y, const Covariance& cov,
                       const IdaOptions& opt) {
    if (x == y) throw ContractError("treatment equals outcome");
    if (cov.size() != g.graph().size()) throw ContractError("covariance size does not match graph");
    const Pdag& h = mh.graph();
    auto sib = h.siblings(x).to_vector();
    const int m = static_cast<int>(sib.size());
    if (m >= 63 || (1LL << m) > opt.max_subsets)
        throw CapabilityError("too many undetermined neighbours for subset enumeration");
    EffectMultiset out;
    for (long long mask = 0; mask < (1LL << m); ++mask) {
        VertexSet s(g.graph().size());
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) s.insert(sib[i]);
        if (!local_parent_validity(g, k, h, x, s)) continue;
        VertexSet pa = s | h.parents(x);
        out.push_back({adjusted_effect(cov, x, y, pa), pa});
    }
    return out;
}

EffectMultiset bgk_ida(const Cpdag& g, const DccSet& k, Vertex x, Vertex y, const Covariance& cov,
                       const IdaOptions& opt) {
    return bgk_ida(g, k, construct_mpdag(g, k), x, y, cov, opt);
}

EffectMultiset bgk_ida(const Cpdag& g, const std::vector<PairwiseConstraint>& b, Vertex x, Vertex y,
                       const Covariance& cov, const IdaOptions& opt) {
    return bgk_ida(g, constraints_to_dccs(g, b), x, y, cov, opt);
}

double cmse(const EffectMultiset& est, double truth) {
    if (est.empty()) throw ContractError("no estimates");
    double s = 0;
    for (const auto& e : est) s += (e.value - truth) * (e.value - truth);
    return s / static_cast<double>(est.size());
}

}  // namespace causal_bgk
