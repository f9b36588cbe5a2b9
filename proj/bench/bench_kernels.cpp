// Serial reference vs OpenMP kernels on representative workloads.
#include "gcp/construct.hpp"
#include "gcp/search.hpp"
#include "gcp/sequence.hpp"

#include <benchmark/benchmark.h>

namespace {

gcp::SeedPair len18_seed() {
    return gcp::SeedPair(
        gcp::QarySeq(4, {0, 0, 2, 0, 0, 2, 2, 2, 0, 0, 3, 0, 1, 0, 1, 0, 3, 0}),
        gcp::QarySeq(4, {0, 1, 0, 0, 1, 0, 2, 3, 2, 0, 2, 2, 1, 3, 3, 0, 2, 2}));
}

// Large complementary pair: the length-18 seed expanded to 18 * 2^m.
gcp::SeqPair big_pair(std::int64_t m) {
    return gcp::construct_pair(len18_seed(), gcp::ExpansionParams::defaults(m, 2));
}

void verify_serial(benchmark::State& state) {
    const gcp::SeqPair pair = big_pair(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcp::first_failing_shift_serial(pair));
    }
}
BENCHMARK(verify_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void verify_parallel(benchmark::State& state) {
    const gcp::SeqPair pair = big_pair(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcp::first_failing_shift(pair));
    }
}
BENCHMARK(verify_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void construct_serial(benchmark::State& state) {
    const gcp::SeedPair seed = len18_seed();
    const gcp::ExpansionParams params = gcp::ExpansionParams::defaults(state.range(0), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcp::construct_pair_serial(seed, params));
    }
}
BENCHMARK(construct_serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void construct_parallel(benchmark::State& state) {
    const gcp::SeedPair seed = len18_seed();
    const gcp::ExpansionParams params = gcp::ExpansionParams::defaults(state.range(0), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcp::construct_pair(seed, params));
    }
}
BENCHMARK(construct_parallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void search_serial(benchmark::State& state) {
    gcp::SearchSpec spec;
    spec.length = state.range(0);
    spec.alphabet = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcp::exhaustive_gcp_search_serial(spec));
    }
}
BENCHMARK(search_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void search_parallel(benchmark::State& state) {
    gcp::SearchSpec spec;
    spec.length = state.range(0);
    spec.alphabet = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcp::exhaustive_gcp_search(spec));
    }
}
BENCHMARK(search_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
