#include <benchmark/benchmark.h>

#include "dlab/classify.hpp"
#include "dlab/generators.hpp"
#include "dlab/independence.hpp"
#include "dlab/order.hpp"

namespace {

void BM_OrderRankLinear(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const dlab::EvalMatrix m = dlab::gen_linear_order(n);
    const dlab::ThresholdPair t(dlab::Rat(0), dlab::Rat(1));
    for (auto _ : state) {
        auto r = dlab::order_rank(m, t, n);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_OrderRankLinear)->Arg(4)->Arg(6)->Arg(8);

void BM_IndependenceShatter(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const dlab::EvalMatrix m = dlab::gen_shatter(d);
    const dlab::ThresholdPair t(dlab::Rat(0), dlab::Rat(1));
    for (auto _ : state) {
        auto r = dlab::independence_rank(m, t, d);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_IndependenceShatter)->Arg(3)->Arg(5)->Arg(6);

void BM_ClassifyRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const dlab::EvalMatrix m = dlab::gen_random(n, n, 11);
    for (auto _ : state) {
        auto rep = dlab::classify::classify(m);
        benchmark::DoNotOptimize(rep.scans.size());
    }
}
BENCHMARK(BM_ClassifyRandom)->Arg(4)->Arg(6);

}  // namespace
