#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "neutro/neutro.hpp"

namespace {

using namespace neutro;

constexpr std::size_t kPoolSize = 4096;  // power of two, cycled via mask

std::vector<Triple> make_pool(std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Triple> pool;
    pool.reserve(kPoolSize);
    for (std::size_t i = 0; i < kPoolSize; ++i) {
        const double mu = rng.next_unit();
        const double omega = rng.next_unit();
        const double nu = rng.next_unit();
        pool.emplace_back(mu, omega, nu);
    }
    return pool;
}

void BM_DeriveIndices(benchmark::State& state) {
    const auto pool = make_pool(7);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_indices(pool[i]));
        i = (i + 1) & (kPoolSize - 1);
    }
}
BENCHMARK(BM_DeriveIndices);

void BM_Classify(benchmark::State& state) {
    const auto pool = make_pool(11);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(pool[i]));
        i = (i + 1) & (kPoolSize - 1);
    }
}
BENCHMARK(BM_Classify);

void BM_Entropy(benchmark::State& state, Variant v) {
    const auto pool = make_pool(13);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(entropy(pool[i], v));
        i = (i + 1) & (kPoolSize - 1);
    }
}
BENCHMARK_CAPTURE(BM_Entropy, czekanowski, Variant::Czekanowski);
BENCHMARK_CAPTURE(BM_Entropy, ruzicka, Variant::Ruzicka);

void BM_Decompose(benchmark::State& state, Variant v) {
    const auto pool = make_pool(17);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(pool[i], v));
        i = (i + 1) & (kPoolSize - 1);
    }
}
BENCHMARK_CAPTURE(BM_Decompose, czekanowski, Variant::Czekanowski);
BENCHMARK_CAPTURE(BM_Decompose, ruzicka, Variant::Ruzicka);

void BM_DecomposeByCases(benchmark::State& state, Variant v) {
    const auto pool = make_pool(19);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_by_cases(pool[i], v));
        i = (i + 1) & (kPoolSize - 1);
    }
}
BENCHMARK_CAPTURE(BM_DecomposeByCases, czekanowski, Variant::Czekanowski);
BENCHMARK_CAPTURE(BM_DecomposeByCases, ruzicka, Variant::Ruzicka);

void BM_EvaluateRecord(benchmark::State& state) {
    const auto pool = make_pool(23);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_record(Record{std::nullopt, pool[i]}));
        i = (i + 1) & (kPoolSize - 1);
    }
}
BENCHMARK(BM_EvaluateRecord);

}  // namespace

BENCHMARK_MAIN();
