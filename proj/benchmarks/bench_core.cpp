#include <benchmark/benchmark.h>

#include "stammerlab/ansatz.hpp"
#include "stammerlab/growth.hpp"
#include "stammerlab/laguerre.hpp"
#include "stammerlab/profile.hpp"
#include "stammerlab/stammering.hpp"

using namespace stammerlab;

namespace {

void BM_partition_function(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(partition_function(n));
}
BENCHMARK(BM_partition_function)->DenseRange(4, 10, 2);

void BM_rook_to_stammering(benchmark::State& state) {
    RookPlacement r{6, {6, 10, 7, 1, 3, 2}};
    for (auto _ : state) benchmark::DoNotOptimize(rook_to_stammering(r));
}
BENCHMARK(BM_rook_to_stammering);

void BM_shadow_construction(benchmark::State& state) {
    RookPlacement r{7, {7, 9, 6, 2, 4, 3, 1}};
    for (auto _ : state) benchmark::DoNotOptimize(rook_to_stammering_via_shadows(r));
}
BENCHMARK(BM_shadow_construction);

void BM_enumerate_stammering(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        for_each_stammering(n, Partition(), Partition(),
                            [&](const StammeringTableau&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate_stammering)->DenseRange(2, 4, 1);

void BM_chain_history_roundtrip(benchmark::State& state) {
    ChainOfDyckShapes chain = chain_from_rook(RookPlacement{6, {6, 10, 7, 1, 3, 2}});
    for (auto _ : state)
        benchmark::DoNotOptimize(chain_from_history(history_from_chain(chain)));
}
BENCHMARK(BM_chain_history_roundtrip);

void BM_permutation_roundtrip(benchmark::State& state) {
    Permutation s({5, 4, 7, 1, 3, 2, 6});
    for (auto _ : state) benchmark::DoNotOptimize(permutation_of(chain_of(s)));
}
BENCHMARK(BM_permutation_roundtrip);

}  // namespace

BENCHMARK_MAIN();
