#include <benchmark/benchmark.h>

#include <random>

#include "cayley/cayley.hpp"

using namespace cayley;

namespace {

void BM_RankKernel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto f = make_field(static_cast<std::uint32_t>(state.range(1)), 1);
    std::mt19937_64 rng(1);
    std::vector<Element> src(static_cast<std::size_t>(n) * n);
    for (auto& e : src) e.code = static_cast<std::uint32_t>(rng() % f->order());
    ScratchMatrix scratch(n);
    for (auto _ : state) benchmark::DoNotOptimize(kernel::rank_in_place(*f, n, scratch.load(src)));
}
BENCHMARK(BM_RankKernel)->Args({3, 3})->Args({5, 7})->Args({8, 251});

void BM_FieldMul(benchmark::State& state) {
    const auto f = make_field(2, static_cast<int>(state.range(0)));
    std::uint32_t acc = 1;
    for (auto _ : state) {
        for (std::uint32_t c = 1; c < f->order(); ++c) acc = f->mul({acc}, {c}).code | 1U;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(12);

void BM_IntersectionOracle(benchmark::State& state) {
    const auto f = make_field(3, 1);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(intersection_count_oracle(2, 3, f, {Budget{}, threads}));
}
BENCHMARK(BM_IntersectionOracle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExplicitGraph(benchmark::State& state) {
    const auto f = make_field(3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(CayleyGraph::build(2, f).pairwise_srg());
}
BENCHMARK(BM_ExplicitGraph)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
