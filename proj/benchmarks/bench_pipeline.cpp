#include "polyomega/barvinok.hpp"
#include "polyomega/elimination.hpp"
#include "polyomega/exactmath.hpp"
#include "polyomega/ratfun.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace polyomega;

namespace {

// Magic-square style system: n×n non-negative entries with equal row sums.
LDSystem row_sum_system(std::size_t n, long sum) {
    const std::size_t d = n * n;
    IntMat a(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, i * n + j) = 1;
    return LDSystem::make(std::move(a), std::vector<Relation>(n, Relation::Eq), IntVec(n, BigInt(sum)));
}

LDSystem random_system(std::uint64_t seed, std::size_t d, std::size_t m) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> e(-5, 5);
    IntMat a(m, d);
    IntVec b(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            a(i, j) = e(rng);
        b[i] = e(rng);
    }
    return LDSystem::make(std::move(a), std::vector<Relation>(m, Relation::Geq), std::move(b));
}

// Index-a cone whose last generator is far from the others, so that Barvinok
// needs several rounds.
SymbolicCone index_cone(long a, std::size_t d) {
    IntMat v = IntMat::identity(d);
    for (std::size_t i = 0; i + 1 < d; ++i)
        v(i, d - 1) = a * (37 + 24 * static_cast<long>(i)) / 100 + 1;
    v(d - 1, d - 1) = a;
    return SymbolicCone::closed(std::move(v), RatVec(d));
}

} // namespace

static void BM_SolveRandom(benchmark::State &state) {
    const LDSystem s = random_system(42, state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(s));
}
BENCHMARK(BM_SolveRandom)->Args({3, 3})->Args({4, 4})->Args({5, 5})->Unit(benchmark::kMillisecond);

static void BM_SolveRowSums(benchmark::State &state) {
    const LDSystem s = row_sum_system(state.range(0), 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(s));
}
BENCHMARK(BM_SolveRowSums)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EnumFundpar(benchmark::State &state) {
    const SymbolicCone c = index_cone(state.range(0), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(enum_fundpar(c));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnumFundpar)->RangeMultiplier(10)->Range(10, 10000)->Unit(benchmark::kMicrosecond);

static void BM_Barvinok(benchmark::State &state) {
    const SymbolicCone c = index_cone(state.range(0), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(barvinok_decompose(c));
}
BENCHMARK(BM_Barvinok)->RangeMultiplier(10)->Range(10, 100000)->Unit(benchmark::kMicrosecond);

static void BM_Snf(benchmark::State &state) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> e(-50, 50);
    const std::size_t n = state.range(0);
    IntMat v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v(i, j) = e(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(snf(v));
}
BENCHMARK(BM_Snf)->DenseRange(2, 8, 2);

static void BM_CountRowSums(benchmark::State &state) {
    const ConeCombination l = solve(row_sum_system(2, state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_lattice_points(l));
}
BENCHMARK(BM_CountRowSums)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
