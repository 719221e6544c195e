#include <benchmark/benchmark.h>

#include "causal_bgk/dcc.hpp"
#include "causal_bgk/decomposition.hpp"
#include "causal_bgk/effects.hpp"
#include "causal_bgk/io.hpp"
#include "causal_bgk/sim.hpp"

using namespace causal_bgk;

namespace {

// one random chordal graph with a true DAG and constraints drawn from it
struct Setup {
    Cpdag g;
    Dag d;
    DccSet k;
    Covariance cov;
};

Setup make(int n, int e, int b) {
    Rng rng(11);
    Cpdag g = Cpdag::trusted(random_chordal(n, e, rng));
    Dag d = sample_dag(g, rng);
    auto wd = assign_weights(d, rng);
    auto cs = gen_constraints(d, ConstraintKind::ancestral, b, rng);
    return {g, d, constraints_to_dccs(g, cs), true_covariance(wd)};
}

void BM_consistency(benchmark::State& st) {
    auto s = make(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) * 5 / 2, 5);
    for (auto _ : st) benchmark::DoNotOptimize(check_consistency(s.g, s.k));
}
BENCHMARK(BM_consistency)->Arg(10)->Arg(30)->Arg(60);

void BM_construct_mpdag(benchmark::State& st) {
    auto s = make(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) * 5 / 2, 5);
    for (auto _ : st) benchmark::DoNotOptimize(construct_mpdag(s.g, s.k));
}
BENCHMARK(BM_construct_mpdag)->Arg(10)->Arg(30)->Arg(60);

void BM_decompose(benchmark::State& st) {
    auto s = make(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) * 5 / 2, 5);
    for (auto _ : st) benchmark::DoNotOptimize(decompose(s.g, s.k));
}
BENCHMARK(BM_decompose)->Arg(10)->Arg(30);

void BM_bgk_ida(benchmark::State& st) {
    auto s = make(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) * 5 / 2, 3);
    Mpdag h = construct_mpdag(s.g, s.k);
    for (auto _ : st) benchmark::DoNotOptimize(bgk_ida(s.g, s.k, h, 0, 1, s.cov));
}
BENCHMARK(BM_bgk_ida)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
