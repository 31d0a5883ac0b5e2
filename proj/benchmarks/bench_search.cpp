#include <benchmark/benchmark.h>

#include "gdeck/search.hpp"

namespace {

// args: n, k, workers
void BM_ScanLength(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const gdeck::GapParams params(2, static_cast<int>(state.range(1)));
    gdeck::SearchOptions opt;
    opt.workers = static_cast<unsigned>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(gdeck::scan_length(n, params, gdeck::DeckKind::full_b, opt));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ScanLength)->Args({13, 3, 1})->Args({18, 4, 1})->Args({18, 4, 4})->Unit(benchmark::kMillisecond);

void BM_ScanEq7(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    gdeck::SearchOptions opt;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdeck::scan_length(n, gdeck::GapParams(2, 3), gdeck::DeckKind::eq7_star, opt));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ScanEq7)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ScanWildcard(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto spec = gdeck::USetSpec::pair(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(gdeck::scan_wildcard_length(m, spec));
}
BENCHMARK(BM_ScanWildcard)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
