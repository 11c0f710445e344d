// Benchmarks for the exact LP-based solvers: game values, Chebyshev
// approximation, and gauge norms.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dlab/convex.hpp"
#include "dlab/matrix.hpp"
#include "dlab/rational.hpp"

namespace {

dlab::convex::SetFamily ring_family(std::size_t g) {
    dlab::convex::SetFamily f;
    f.ground = g;
    for (std::size_t i = 0; i < g; ++i) {
        std::size_t a = i;
        std::size_t b = (i + 1) % g;
        if (a > b) std::swap(a, b);
        f.members.push_back({a, b});
    }
    return f;
}

void BM_PtakValue(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto family = ring_family(n);
    for (auto _ : state) {
        auto sol = dlab::convex::ptak_value(family);
        benchmark::DoNotOptimize(sol);
    }
}

dlab::EvalMatrix grid_matrix(std::size_t n) {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<dlab::Rat>> entries(n, std::vector<dlab::Rat>(n));
    for (std::size_t i = 0; i < n; ++i) row_labels.push_back("a" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) col_labels.push_back("x" + std::to_string(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entries[i][j] = dlab::Rat(static_cast<long>((i * j) % 7) - 3, 4);
    return dlab::validate_matrix(row_labels, col_labels, entries, dlab::Rat(1));
}

void BM_MazurApprox(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = grid_matrix(n);
    std::vector<std::size_t> seq(n);
    std::iota(seq.begin(), seq.end(), std::size_t{0});
    std::vector<dlab::Rat> target(m.cols(), dlab::Rat(1, 8));
    for (auto _ : state) {
        auto res = dlab::convex::mazur_approx(m, seq, target, 0);
        benchmark::DoNotOptimize(res);
    }
}

void BM_GaugeNorm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = grid_matrix(n);
    std::vector<std::vector<dlab::Rat>> generators;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<dlab::Rat> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(m.at(i, j));
        generators.push_back(std::move(row));
    }
    std::vector<dlab::Rat> target(n);
    for (std::size_t j = 0; j < n; ++j)
        target[j] = generators[0][j] / 2 + generators[n - 1][j] / 4;
    for (auto _ : state) {
        auto res = dlab::convex::gauge_norm(generators, target);
        benchmark::DoNotOptimize(res);
    }
}

}  // namespace

BENCHMARK(BM_PtakValue)->Arg(5)->Arg(9)->Arg(13);
BENCHMARK(BM_MazurApprox)->Arg(4)->Arg(8);
BENCHMARK(BM_GaugeNorm)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
