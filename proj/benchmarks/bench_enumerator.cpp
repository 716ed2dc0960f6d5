#include "liezeta/enumerator.hpp"

#include <benchmark/benchmark.h>

using namespace liezeta;

static void BM_ZetaC5(benchmark::State& state) {
    u32 p = static_cast<u32>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_graded_zeta(5, p, {}).codim_coeffs);
}
BENCHMARK(BM_ZetaC5)->Arg(5)->Arg(11);

static void BM_C6Codim9(benchmark::State& state) {
    u32 p = static_cast<u32>(state.range(0));
    EnumOptions opts;
    opts.threads = 2;
    opts.node_budget = bigint(4000000000LL);
    for (auto _ : state)
        benchmark::DoNotOptimize(c6_codim9_enumerate(p, opts).total);
}
BENCHMARK(BM_C6Codim9)->Arg(5)->Arg(31)->Unit(benchmark::kMillisecond);

static void BM_RankHistogramLayer5(benchmark::State& state) {
    // the hot loop of the codimension-9 scan: tail ranks over a layer-5 base
    PrimeField F(static_cast<u32>(state.range(0)));
    GradedLieAlgebra A = build_graded_algebra(6, F);
    SubspaceStream st(A.d[3], 1, F);
    Subspace I;
    st.next(I);
    Subspace base = A.phi_on_subspace(4, I);
    for (auto _ : state)
        benchmark::DoNotOptimize(phi_rank_histogram(A, 5, base, 5, 1));
    state.SetItemsProcessed(
        state.iterations() *
        gaussian_binomial_at(4, 3, state.range(0)).convert_to<long long>());
}
BENCHMARK(BM_RankHistogramLayer5)->Arg(7)->Arg(13)->Arg(31);

static void BM_AlphaWindowK5P7(benchmark::State& state) {
    PrimeField F(7);
    GradedLieAlgebra A = build_graded_algebra(6, F);
    EnumOptions opts;
    opts.threads = 2;
    opts.node_budget = bigint(4000000000LL);
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_window_table(A, 1, 5, opts));
    state.SetLabel("all 6.2e7 subspaces of the 6-dim layer");
}
BENCHMARK(BM_AlphaWindowK5P7)->Unit(benchmark::kMillisecond)->Iterations(1);
