#include <benchmark/benchmark.h>

#include <random>

#include "polyplace/bench.hpp"
#include "polyplace/solver.hpp"

using namespace polyplace;

namespace {

BenchInstance instance(std::size_t size) {
    std::mt19937_64 rng(size);
    return make_bench_instance(BenchSuite::Generated, size, rng);
}

void BM_max_scale(benchmark::State& state) {
    const auto inst = instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_scale(inst.p, inst.q));
    state.SetComplexityN(static_cast<std::int64_t>(inst.q.size()));
}

void BM_max_scale_baseline(benchmark::State& state) {
    const auto inst = instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_scale_baseline(inst.p, inst.q));
    state.SetComplexityN(static_cast<std::int64_t>(inst.q.size()));
}

}  // namespace

BENCHMARK(BM_max_scale)->RangeMultiplier(2)->Range(50, 400)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_max_scale_baseline)->RangeMultiplier(2)->Range(50, 400)->Unit(benchmark::kMillisecond)->Complexity();
