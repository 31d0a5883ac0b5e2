#include <benchmark/benchmark.h>

#include <random>

#include "gdeck/constructions.hpp"
#include "gdeck/deck.hpp"

namespace {

gdeck::BinaryString random_string(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
    return gdeck::BinaryString(std::move(bits));
}

// args: n, k
void BM_SignatureExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const gdeck::GapParams params(2, static_cast<int>(state.range(1)));
    const auto x = random_string(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gdeck::signature(x, params));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SignatureExact)->Args({24, 4})->Args({128, 6})->Args({512, 8})->Args({2048, 6});

void BM_SignatureFingerprint(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const gdeck::GapParams params(2, static_cast<int>(state.range(1)));
    const auto x = random_string(n, 2);
    const auto mode = gdeck::CountMode::fingerprint_default();
    for (auto _ : state) benchmark::DoNotOptimize(gdeck::signature(x, params, mode));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SignatureFingerprint)->Args({1024, 8})->Args({4092, 10});

void BM_CountGapped(benchmark::State& state) {
    const auto x = random_string(static_cast<std::size_t>(state.range(0)), 3);
    const auto w = random_string(4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(gdeck::count_gapped(w, x, 2));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountGapped)->Arg(64)->Arg(1024)->Arg(16384);

void BM_VerifyEq7Padded(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto pair = gdeck::padded_mt(k);
    for (auto _ : state) benchmark::DoNotOptimize(gdeck::verify_eq7(pair.x, pair.y, gdeck::GapParams(2, k)));
}
BENCHMARK(BM_VerifyEq7Padded)->DenseRange(2, 6, 2);

}  // namespace
