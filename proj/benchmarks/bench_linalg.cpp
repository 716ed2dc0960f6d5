#include "liezeta/counting.hpp"
#include "liezeta/fp.hpp"
#include "liezeta/subspace.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace liezeta;

namespace {

FpMatrix random_matrix(std::size_t rows, std::size_t cols, u32 p, unsigned seed) {
    std::mt19937 rng(seed);
    FpMatrix m(rows, cols);
    for (auto& x : m.data) x = rng() % p;
    return m;
}

}  // namespace

static void BM_Rref10x9(benchmark::State& state) {
    PrimeField F(31);
    FpMatrix m = random_matrix(10, 9, 31, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m, F).rank);
}
BENCHMARK(BM_Rref10x9);

static void BM_EchelonRank10x9(benchmark::State& state) {
    PrimeField F(31);
    FpMatrix m = random_matrix(10, 9, 31, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m, F));
}
BENCHMARK(BM_EchelonRank10x9);

static void BM_SubspaceStream(benchmark::State& state) {
    PrimeField F(static_cast<u32>(state.range(0)));
    for (auto _ : state) {
        SubspaceStream st(6, 3, F);
        Subspace s;
        std::size_t n = 0;
        while (st.next(s)) ++n;
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(state.iterations() *
                            gaussian_binomial_at(6, 3, state.range(0))
                                .convert_to<long long>());
}
BENCHMARK(BM_SubspaceStream)->Arg(2)->Arg(3);

static void BM_GaussianBinomialAt(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(gaussian_binomial_at(18, 9, 13));
}
BENCHMARK(BM_GaussianBinomialAt);

BENCHMARK_MAIN();
