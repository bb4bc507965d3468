// Microbenchmarks for the schedulers and the validator at the grid scales
// the experiment harness uses most.

#include <benchmark/benchmark.h>

#include "pma/bench.hpp"
#include "pma/compact.hpp"
#include "pma/greedy.hpp"
#include "pma/sizeone.hpp"
#include "pma/validate.hpp"

namespace {

pma::Instance make(int P, int tau, int n, std::uint64_t seed) {
    return pma::gen_instance(P, tau, n, pma::DelayDist::UniformPeriod, seed);
}

void BM_FirstFit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto inst = make(10 * n, 10, n, seed++);
        benchmark::DoNotOptimize(pma::first_fit(inst));
    }
}
BENCHMARK(BM_FirstFit)->Arg(50)->Arg(100)->Arg(200);

void BM_MetaOffset(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto inst = make(10 * n, 10, n, seed++);
        benchmark::DoNotOptimize(pma::meta_offset(inst));
    }
}
BENCHMARK(BM_MetaOffset)->Arg(50)->Arg(100)->Arg(200);

void BM_CompactPair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto inst = make(10 * n, 10, n, seed++);
        benchmark::DoNotOptimize(pma::compact_pair_solve(inst));
    }
}
BENCHMARK(BM_CompactPair)->Arg(50)->Arg(100)->Arg(200);

void BM_CompactFit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto inst = make(10 * n, 10, n, seed++);
        benchmark::DoNotOptimize(pma::compact_fit(inst));
    }
}
BENCHMARK(BM_CompactFit)->Arg(50)->Arg(100)->Arg(200);

void BM_GreedyUniform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto inst = make(n, 1, n, seed);
        benchmark::DoNotOptimize(pma::greedy_uniform(inst, seed++));
    }
}
BENCHMARK(BM_GreedyUniform)->Arg(100)->Arg(400);

void BM_SwapAndMove(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto inst = make(n, 1, n, seed++);
        benchmark::DoNotOptimize(pma::swap_and_move(inst));
    }
}
BENCHMARK(BM_SwapAndMove)->Arg(100)->Arg(400);

void BM_Validate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto inst = make(4 * n, 2, n, 9);
    auto out = pma::first_fit(inst);
    for (auto _ : state) benchmark::DoNotOptimize(pma::validate(inst, *out.assignment));
}
BENCHMARK(BM_Validate)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
