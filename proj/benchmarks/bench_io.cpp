#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "neutro/neutro.hpp"

namespace {

using namespace neutro;

constexpr std::size_t kRows = 1024;

std::string make_csv(std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::string csv = "id,mu,omega,nu\n";
    for (std::size_t i = 0; i < kRows; ++i) {
        const double mu = rng.next_unit();
        const double omega = rng.next_unit();
        const double nu = rng.next_unit();
        csv += "row" + std::to_string(i);
        csv += ',' + format_number(mu);
        csv += ',' + format_number(omega);
        csv += ',' + format_number(nu);
        csv += '\n';
    }
    return csv;
}

std::vector<ResultRow> make_rows(std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<ResultRow> rows;
    rows.reserve(kRows);
    for (std::size_t i = 0; i < kRows; ++i) {
        const double mu = rng.next_unit();
        const double omega = rng.next_unit();
        const double nu = rng.next_unit();
        rows.push_back(evaluate_record(
            Record{"row" + std::to_string(i), Triple(mu, omega, nu)}));
    }
    return rows;
}

void BM_ParseCsv(benchmark::State& state) {
    const std::string csv = make_csv(29);
    for (auto _ : state) {
        std::istringstream in(csv);
        benchmark::DoNotOptimize(parse_records(in, {Format::Csv, false}));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * csv.size()));
}
BENCHMARK(BM_ParseCsv);

void BM_EmitCsv(benchmark::State& state) {
    const auto rows = make_rows(31);
    std::size_t bytes = 0;
    for (auto _ : state) {
        std::ostringstream out;
        emit_results(rows, Format::Csv, out);
        bytes = out.str().size();
        benchmark::DoNotOptimize(bytes);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_EmitCsv);

void BM_EmitJsonl(benchmark::State& state) {
    const auto rows = make_rows(37);
    std::size_t bytes = 0;
    for (auto _ : state) {
        std::ostringstream out;
        emit_results(rows, Format::Jsonl, out);
        bytes = out.str().size();
        benchmark::DoNotOptimize(bytes);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_EmitJsonl);

void BM_EvaluateGrid(benchmark::State& state) {
    const GridSpec spec{0.25, static_cast<int>(state.range(0)), Quantity::EntropyC};
    for (auto _ : state) {
        const Grid grid = evaluate_grid(spec);
        benchmark::DoNotOptimize(grid.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_EvaluateGrid)->Arg(101)->Arg(501);

void BM_GridPpm(benchmark::State& state) {
    const Grid grid = evaluate_grid({0.25, 501, Quantity::EntropyC});
    std::size_t bytes = 0;
    for (auto _ : state) {
        const std::string ppm = grid_ppm(grid);
        bytes = ppm.size();
        benchmark::DoNotOptimize(bytes);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_GridPpm);

}  // namespace
