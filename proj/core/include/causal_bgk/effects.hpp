#pragma once

#include <Eigen/Dense>
#include <vector>

#include "causal_bgk/dcc.hpp"
#include "causal_bgk/graph.hpp"

namespace causal_bgk {

// symmetric positive definite matrix indexed by vertex id
class Covariance {
public:
    // throws NumericalError if not symmetric (1e-12) or not positive definite
    explicit Covariance(Eigen::MatrixXd m);
    const Eigen::MatrixXd& matrix() const noexcept { return m_; }
    int size() const noexcept { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }

private:
    Eigen::MatrixXd m_;
};

struct EffectEntry {
    double value;
    VertexSet parents;
};

// one entry per valid parent set; duplicates of value kept
using EffectMultiset = std::vector<EffectEntry>;

// Coefficient of x when regressing y on x and Z. Returns 0 when y is in Z,
// the case of y being a parent of x.
double adjusted_effect(const Covariance& cov, Vertex x, Vertex y, const VertexSet& Z);

// whether pa(x, h) + S can be x's parent set in some DAG of [g, k]
bool local_parent_validity(const Pdag& g, const DccSet& k, const Pdag& h, Vertex x, const VertexSet& S);

struct IdaOptions {
    long long max_subsets = 1LL << 20;
};

EffectMultiset bgk_ida(const Cpdag& g, const DccSet& k, Vertex x, Vertex y, const Covariance& cov,
                       const IdaOptions& opt = {});
EffectMultiset bgk_ida(const Cpdag& g, const std::vector<PairwiseConstraint>& b, Vertex x, Vertex y,
                       const Covariance& cov, const IdaOptions& opt = {});
// with a precomputed MPDAG of [g, k]
EffectMultiset bgk_ida(const Cpdag& g, const DccSet& k, const Mpdag& h, Vertex x, Vertex y, const Covariance& cov,
                       const IdaOptions& opt = {});

double cmse(const EffectMultiset& estimates, double truth);

}  // namespace causal_bgk
