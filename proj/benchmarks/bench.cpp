#include <benchmark/benchmark.h>

#include "slt/index_bound.hpp"

namespace {

using namespace slt;

void BM_resolve(benchmark::State& state) {
    const long r = state.range(0);
    for (auto _ : state) {
        auto res = resolve(Int(r), Int(r - 1));
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_resolve)->Arg(100)->Arg(1000)->Arg(10000);

void BM_build_class_t(benchmark::State& state) {
    for (auto _ : state) {
        SltModel m = SltModel::build_class_t(12, 3, 17);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_build_class_t);

void BM_nu(benchmark::State& state) {
    const SltModel m = SltModel::build_class_t(12, 3, 17);
    Int n = 1;
    for (auto _ : state) {
        auto v = nu(m, n);
        benchmark::DoNotOptimize(v);
        n = n % (m.m() - 1) + 1;
    }
}
BENCHMARK(BM_nu);

void BM_sheaf_oracle(benchmark::State& state) {
    const SltModel m = SltModel::build_class_t(12, 3, 17);
    Int n = 1;
    for (auto _ : state) {
        auto v = fullsheaf_oracle(m, n);
        benchmark::DoNotOptimize(v);
        n = n % (m.m() - 1) + 1;
    }
}
BENCHMARK(BM_sheaf_oracle);

void BM_pair_closed_form(benchmark::State& state) {
    const SltModel m = SltModel::build_class_t(12, 3, 17);
    const DivisorVector v = nu(m, 11);
    for (auto _ : state) {
        auto p = pair_closed_form(m, v, v);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_pair_closed_form);

void BM_b_max(benchmark::State& state) {
    for (auto _ : state) {
        Int b = B_max(Int(state.range(0)), 3);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_b_max)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
