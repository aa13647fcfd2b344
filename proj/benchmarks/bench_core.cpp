// Throughput of the main kernels: generator action, chain verification,
// orbit enumeration (serial and parallel) and descent certification.

#include "toda/chains.hpp"
#include "toda/orbit.hpp"

#include <benchmark/benchmark.h>

using namespace toda;

static void BM_ApplyGeneratorGeneric(benchmark::State& state) {
    const AlgebraSpec spec{Family::AffineA, static_cast<int>(state.range(0))};
    const Action act(spec);
    MassVector v = make_generic(spec);
    int g = 1;
    for (auto _ : state) {
        act.apply_in_place(g, v);
        g = g % spec.size() + 1;
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ApplyGeneratorGeneric)->Arg(2)->Arg(4)->Arg(8);

static void BM_ChainIdentityA(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AlgebraSpec spec{Family::AffineA, n};
    const auto g = make_generic(spec);
    const auto J = ConsecutiveSet::consecutive(1, n - 1);
    for (auto _ : state) {
        const bool eq = apply_word(chain_word_a(J, spec).word, g) == closed_form_a(g, J);
        benchmark::DoNotOptimize(eq);
    }
}
BENCHMARK(BM_ChainIdentityA)->DenseRange(2, 6);

static void BM_Enumerate(benchmark::State& state) {
    const AlgebraSpec spec{Family::AffineA, 3};
    EnumerateOptions opts;
    opts.workers = static_cast<int>(state.range(1));
    std::size_t nodes = 0;
    for (auto _ : state) {
        nodes = enumerate(spec, static_cast<int>(state.range(0)), opts).size();
        benchmark::DoNotOptimize(nodes);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Enumerate)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_DescendOrbit(benchmark::State& state) {
    const auto nodes = enumerate({Family::AffineCt, 3}, static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& nd : nodes) benchmark::DoNotOptimize(descend_to_zero(nd.vector));
    state.counters["nodes"] = static_cast<double>(nodes.size());
}
BENCHMARK(BM_DescendOrbit)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
