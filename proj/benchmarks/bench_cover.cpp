#include <benchmark/benchmark.h>

#include <random>

#include "polyplace/cover_dynamic.hpp"

using namespace polyplace;

namespace {

// n live rectangles over an n x n rank grid, then 4n mixed updates.
TraceProblem make_trace(std::size_t n) {
    std::mt19937_64 rng(n);
    const auto side = static_cast<std::int64_t>(n);
    std::uniform_int_distribution<std::int64_t> len(1, std::max<std::int64_t>(1, side / 4));
    const auto rect = [&] {
        const std::int64_t w = len(rng), h = len(rng);
        std::uniform_int_distribution<std::int64_t> x(1, side - w + 1), y(1, side - h + 1);
        const std::int64_t x0 = x(rng), y0 = y(rng);
        return RankRect{x0, x0 + w - 1, y0, y0 + h - 1};
    };
    TraceProblem tp;
    tp.n = 2 * n;
    tp.nx = side;
    tp.ny = side;
    std::vector<std::uint64_t> live;
    std::uint64_t next = 1;
    for (std::size_t i = 0; i < n; ++i) {
        tp.initial.emplace_back(next, rect());
        live.push_back(next++);
    }
    for (std::size_t i = 0; i < 4 * n; ++i) {
        if (i % 2 == 0) {
            tp.updates.push_back({UpdateKind::Add, rect(), next, i + 1});
            live.push_back(next++);
        } else {
            const std::size_t k = rng() % live.size();
            tp.updates.push_back({UpdateKind::Delete, {}, live[k], i + 1});
            live[k] = live.back();
            live.pop_back();
        }
    }
    return tp;
}

void run(benchmark::State& state, CoverImpl impl) {
    const TraceProblem tp = make_trace(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(area_after_each(tp, impl));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tp.updates.size()));
    state.SetComplexityN(state.range(0));
}

void BM_cover_overmars_yap(benchmark::State& state) { run(state, CoverImpl::OvermarsYap); }
void BM_cover_naive(benchmark::State& state) { run(state, CoverImpl::Naive); }

}  // namespace

BENCHMARK(BM_cover_overmars_yap)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_cover_naive)->RangeMultiplier(10)->Range(100, 1000)->Unit(benchmark::kMillisecond)->Complexity();
