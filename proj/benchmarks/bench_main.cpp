#include "fa/facalc.hpp"
#include "fa/linalg.hpp"
#include "fa/oracle/nat_hom.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fa;

static void BM_character_table_uncached(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto ps = partitions_of(n);
    for (auto _ : state)
        for (const auto& l : ps)
            for (const auto& m : ps)
                benchmark::DoNotOptimize(mn_character(l, m));
}
BENCHMARK(BM_character_table_uncached)->DenseRange(4, 10, 2);

static void BM_day_convolution(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    VirtualFB a = series_H(1, N), b = series_S(0, N);
    for (auto _ : state)
        benchmark::DoNotOptimize(day(a, b));
}
BENCHMARK(BM_day_convolution)->DenseRange(4, 10, 2);

static void BM_surjection_bimodule(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fs_class(N));
}
BENCHMARK(BM_surjection_bimodule)->DenseRange(3, 6);

static void BM_hom_pbar_tensor(benchmark::State& state)
{
    const int s = static_cast<int>(state.range(0));
    const int N = 6;
    auto G = oracle::build("pbar:" + std::to_string(s), N);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::hom_from_pbar_tensor(s, G).dimension);
}
BENCHMARK(BM_hom_pbar_tensor)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_generic_nat_hom(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    auto F = oracle::build("pbar:1", N);
    auto G = oracle::build("pbar:2", N);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::nat_hom(F, G, false).dimension);
}
BENCHMARK(BM_generic_nat_hom)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_kernel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const bool modular = state.range(1) != 0;
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> d(-4, 4);
    RationalMatrix m(n, n + n / 2);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (rng() % 4 == 0)
                m(i, j) = d(rng);
    SparseRows rows = SparseRows::from_dense(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(modular ? kernel(rows).free_cols.size() : kernel_exact(rows).free_cols.size());
}
BENCHMARK(BM_kernel)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
