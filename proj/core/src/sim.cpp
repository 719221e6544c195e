#include "causal_bgk/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "causal_bgk/chordal.hpp"
#include "causal_bgk/errors.hpp"
#include "causal_bgk/paths.hpp"

namespace causal_bgk {

const char* kind_name(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::direct: return "direct";
        case ConstraintKind::ancestral: return "ancestral";
        case ConstraintKind::non_ancestral: return "nonancestral";
    }
    return "?";
}

namespace {
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
}  // namespace

Pdag random_chordal(int n, int e, Rng& rng) {
    if (n < 1 || e < n - 1 || e > n * (n - 1) / 2) throw ContractError("infeasible vertex/edge counts");
    for (int attempt = 0; attempt < 100; ++attempt) {
        Pdag g = Pdag::with_size(n);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 1; i < n; ++i) g.add_undirected(order[i], order[uniform_int(rng, 0, i - 1)]);
        int edges = n - 1;
        bool stuck = false;
        while (edges < e && !stuck) {
            std::vector<std::pair<int, int>> cand;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (!g.adjacent(a, b)) cand.emplace_back(a, b);
            std::shuffle(cand.begin(), cand.end(), rng);
            stuck = true;
            for (auto [a, b] : cand) {
                g.add_undirected(a, b);
                if (is_chordal(g)) {
                    ++edges;
                    stuck = false;
                    break;
                }
                g.remove_edge(a, b);
            }
        }
        if (edges == e) return g;
    }
    throw ContractError("could not build a chordal graph with the requested edge count");
}

Dag sample_dag(const Cpdag& cg, Rng& rng, const OracleOptions& opt) {
    const Pdag& g = cg.graph();
    bool small = true;
    for (auto& c : chain_components(g))
        if (c.size() > opt.max_component) small = false;
    if (small) {
        auto all = enumerate_class(cg, opt);
        return all[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(all.size()) - 1))];
    }
    Pdag d = g;
    for (auto& comp : chain_components(g)) {
        VertexSet left = comp;
        while (!left.empty()) {
            std::vector<Vertex> simp;
            for (Vertex v : left)
                if (is_simplicial(g, v, left)) simp.push_back(v);
            Vertex v = simp[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(simp.size()) - 1))];
            left.erase(v);
            for (Vertex w : g.siblings(v) & left) d.add_directed(w, v);
        }
    }
    return Dag::trusted(std::move(d));
}

WeightedDag assign_weights(const Dag& d, Rng& rng, double lo, double hi) {
    const int n = d.graph().size();
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    std::uniform_real_distribution<double> u(lo, hi);
    for (auto e : d.graph().directed_edges()) w(e.tail, e.head) = u(rng);
    return {d, w};
}

Covariance true_covariance(const WeightedDag& wd) {
    const int n = static_cast<int>(wd.weights.rows());
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - wd.weights;
    Eigen::MatrixXd inv = a.inverse();
    Eigen::MatrixXd s = inv.transpose() * inv;
    // exact symmetry for the validator
    Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
    return Covariance(sym);
}

double total_effect(const WeightedDag& wd, Vertex x, Vertex y) {
    const Pdag& g = wd.dag.graph();
    std::vector<double> eff(g.size(), 0.0);
    eff[x] = 1.0;
    for (Vertex v : topological_order(g)) {
        if (v == x) continue;
        for (Vertex p : g.parents(v)) eff[v] += wd.weights(p, v) * eff[p];
    }
    return eff[y];
}

std::vector<PairwiseConstraint> gen_constraints(const Dag& d, ConstraintKind kind, int b, Rng& rng) {
    const Pdag& g = d.graph();
    const int n = g.size();
    std::vector<PairwiseConstraint> pool;
    for (int x = 0; x < n; ++x) {
        VertexSet de = descendants(g, VertexSet(n, {x}));
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            bool ok = kind == ConstraintKind::direct      ? g.has_directed(x, y)
                      : kind == ConstraintKind::ancestral ? de.contains(y)
                                                          : !de.contains(y);
            if (ok) pool.push_back({kind, x, y});
        }
    }
    if (static_cast<int>(pool.size()) < b) throw ContractError("not enough true constraints of this kind");
    for (int i = 0; i < b; ++i) std::swap(pool[i], pool[uniform_int(rng, i, static_cast<int>(pool.size()) - 1)]);
    pool.resize(b);
    return pool;
}

SimResult run_experiment(const SimConfig& cfg) {
    if (cfg.b_values.empty() || cfg.b_values.front() != 0 || !std::is_sorted(cfg.b_values.begin(), cfg.b_values.end()))
        throw ContractError("b values must be ascending and start at 0");
    const int max_b = cfg.b_values.back();
    const std::size_t nk = cfg.kinds.size(), nb = cfg.b_values.size();
    // per (kind, b): sums over replicates
    std::vector<double> raw_sum(nk * nb, 0.0), resc_sum(nk * nb, 0.0), resc_sq(nk * nb, 0.0);
    std::vector<int> raw_cnt(nk * nb, 0), resc_cnt(nk * nb, 0);
    SimResult res;

    for (int r = 0; r < cfg.replicates; ++r) {
        try {
            std::seed_seq ss{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                             static_cast<std::uint32_t>(r)};
            Rng rng(ss);
            Cpdag g = Cpdag::trusted(random_chordal(cfg.n, cfg.e, rng));
            Dag d = sample_dag(g, rng);
            WeightedDag wd = assign_weights(d, rng);
            Covariance cov = true_covariance(wd);
            std::vector<std::pair<int, int>> pairs;
            for (int x = 0; x < cfg.n; ++x)
                for (Vertex y : possible_descendants(g, VertexSet(cfg.n, {x})))
                    if (y != x) pairs.emplace_back(x, y);
            if (pairs.empty()) throw ContractError("no pair with a possibly causal path");
            auto [x, y] = pairs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pairs.size()) - 1))];
            const double truth = total_effect(wd, x, y);
            const double base = cmse(bgk_ida(g, DccSet{}, x, y, cov), truth);
            const bool rescale = base > 0.0;
            if (!rescale) ++res.replicates_dropped;

            for (std::size_t ki = 0; ki < nk; ++ki) {
                std::seed_seq ks{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                                 static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(ki + 1)};
                Rng krng(ks);
                auto all = gen_constraints(d, cfg.kinds[ki], max_b, krng);
                for (std::size_t bi = 0; bi < nb; ++bi) {
                    std::vector<PairwiseConstraint> prefix(all.begin(), all.begin() + cfg.b_values[bi]);
                    double c = bi == 0 && cfg.b_values[bi] == 0 ? base : cmse(bgk_ida(g, prefix, x, y, cov), truth);
                    std::size_t idx = ki * nb + bi;
                    raw_sum[idx] += c;
                    ++raw_cnt[idx];
                    if (rescale) {
                        double q = c / base;
                        resc_sum[idx] += q;
                        resc_sq[idx] += q * q;
                        ++resc_cnt[idx];
                    }
                }
            }
        } catch (const Error& ex) {
            res.log.push_back("replicate " + std::to_string(r) + " skipped: " + ex.what());
        }
    }
    for (std::size_t ki = 0; ki < nk; ++ki)
        for (std::size_t bi = 0; bi < nb; ++bi) {
            std::size_t idx = ki * nb + bi;
            int m = resc_cnt[idx];
            double mean = m ? resc_sum[idx] / m : std::nan("");
            double se = std::nan("");
            if (m > 1) {
                double var = (resc_sq[idx] - m * mean * mean) / (m - 1);
                se = std::sqrt(std::max(var, 0.0) / m);
            }
            res.rows.push_back({cfg.kinds[ki], cfg.b_values[bi], mean, se,
                                raw_cnt[idx] ? raw_sum[idx] / raw_cnt[idx] : std::nan(""), m});
        }
    return res;
}

std::string to_csv(const SimResult& r) {
    std::string out = "kind,b,mean_rescaled_cmse,raw_cmse_mean,replicates_used\n";
    char buf[160];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof buf, "%s,%d,%.17g,%.17g,%d\n", kind_name(row.kind), row.b, row.mean_rescaled_cmse,
                      row.raw_cmse_mean, row.replicates_used);
        out += buf;
    }
    return out;
}

}  // namespace causal_bgk
