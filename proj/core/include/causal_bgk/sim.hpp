#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "causal_bgk/dcc.hpp"
#include "causal_bgk/effects.hpp"
#include "causal_bgk/graph.hpp"
#include "causal_bgk/oracle.hpp"

namespace causal_bgk {

using Rng = std::mt19937_64;

struct WeightedDag {
    Dag dag;
    Eigen::MatrixXd weights;  // weights(i, j) is the coefficient of i -> j
};

// connected chordal graph with n vertices and e undirected edges: a random
// tree grown by chordality-preserving edge additions
Pdag random_chordal(int n, int e, Rng& rng);

// uniform over the class when the oracle can enumerate it, otherwise a random
// sink-elimination orientation of each chain component
Dag sample_dag(const Cpdag& g, Rng& rng, const OracleOptions& opt = {});

WeightedDag assign_weights(const Dag& d, Rng& rng, double lo = 0.5, double hi = 2.0);

// unit error variances
Covariance true_covariance(const WeightedDag& wd);

// sum over directed paths of the product of edge weights
double total_effect(const WeightedDag& wd, Vertex x, Vertex y);

// b distinct constraints of the given kind that hold in d, uniformly chosen
std::vector<PairwiseConstraint> gen_constraints(const Dag& d, ConstraintKind kind, int b, Rng& rng);

struct SimConfig {
    int n = 10;
    int e = 15;
    std::vector<int> b_values{0, 1, 2, 3, 4, 5};
    std::vector<ConstraintKind> kinds{ConstraintKind::direct, ConstraintKind::ancestral,
                                      ConstraintKind::non_ancestral};
    int replicates = 500;
    std::uint64_t seed = 7;
};

struct SimRow {
    ConstraintKind kind;
    int b;
    double mean_rescaled_cmse;
    double se_rescaled_cmse;
    double raw_cmse_mean;
    int replicates_used;
};

struct SimResult {
    std::vector<SimRow> rows;
    int replicates_dropped = 0;  // zero baseline error, excluded from rescaling
    std::vector<std::string> log;
};

SimResult run_experiment(const SimConfig& cfg);

// columns: kind, b, mean_rescaled_cmse, raw_cmse_mean, replicates_used
std::string to_csv(const SimResult& r);

const char* kind_name(ConstraintKind k);

}  // namespace causal_bgk
