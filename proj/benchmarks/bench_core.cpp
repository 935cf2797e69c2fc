#include <benchmark/benchmark.h>

#include "circstab/chains.hpp"
#include "circstab/cohomology.hpp"
#include "circstab/projective.hpp"
#include "circstab/schur.hpp"
#include "circstab/twofold.hpp"

using namespace circstab;

namespace {

ConnectionSet hard_instance(int n) {
    // the condition-ii family {1, 2, n-2, n-1}
    return ConnectionSet(n, std::vector<int>{1, 2, n - 2, n - 1});
}

void bm_automorphisms_circulant(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto g = build_circulant(hard_instance(n));
    for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g).order());
}
BENCHMARK(bm_automorphisms_circulant)->Arg(10)->Arg(22)->Arg(30)->Arg(50);

void bm_automorphisms_complete(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<int> all;
    for (int i = 1; i < n; ++i) all.push_back(i);
    auto cover = uncolored(tensor_k2(build_circulant(ConnectionSet(n, all))));
    for (auto _ : state) benchmark::DoNotOptimize(automorphisms(cover).order());
}
BENCHMARK(bm_automorphisms_complete)->Arg(14)->Arg(22);

void bm_classify_cross_check(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto s = hard_instance(n);
    for (auto _ : state) benchmark::DoNotOptimize(classify(s, ClassifyMode::CrossCheck).status);
}
BENCHMARK(bm_classify_cross_check)->Arg(10)->Arg(22)->Arg(30);

void bm_cover_transitivity_module(benchmark::State& state) {
    auto s = hard_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cover_transitivity_module(s).basic_sets.blocks.size());
}
BENCHMARK(bm_cover_transitivity_module)->Arg(10)->Arg(14);

void bm_chain_enumeration(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    ColoredConnectionSets g(m, {0b10ull | (1ull << (m - 1))});  // S = {1, m-1}
    for (auto _ : state) benchmark::DoNotOptimize(aut_ch_enumerate(g).size());
}
BENCHMARK(bm_chain_enumeration)->Arg(7)->Arg(9)->Arg(11);

void bm_cocycle_solver(benchmark::State& state) {
    auto g = build_SL2(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(h1_dimension(g));
}
BENCHMARK(bm_cocycle_solver)->Arg(2)->Arg(3);

void bm_indicator_cocycle_scan(benchmark::State& state) {
    auto g = build_PGammaL2(2);
    for (auto _ : state) benchmark::DoNotOptimize(indicator_cocycle_scan(g).assertion_ok);
}
BENCHMARK(bm_indicator_cocycle_scan);

}  // namespace

BENCHMARK_MAIN();
