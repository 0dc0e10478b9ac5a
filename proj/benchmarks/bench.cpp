#include <benchmark/benchmark.h>

#include "colpart/bijection.hpp"
#include "colpart/frobenius.hpp"
#include "colpart/partition.hpp"
#include "colpart/qseries.hpp"

using namespace colpart;

namespace {

void BM_Reduce(benchmark::State& state) {
    auto c = parse_colour_sequence(
        "a1b1,a1b2,a2b2,a3b3,a3b1,a1b3,a3b3,a3b3,a3b2,a1b1,a0b1,a1b1,a1b0,a0b0");
    for (auto _ : state) benchmark::DoNotOptimize(reduce(c));
}
BENCHMARK(BM_Reduce);

void BM_EnumerateMembers(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int w = static_cast<int>(state.range(1));
    long long count = 0;
    for (auto _ : state) {
        count = 0;
        enumerate_members_unordered(MembershipSpec::pn(n), w,
                                    [&](const ColouredPartition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.counters["members"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateMembers)->Args({2, 12})->Args({3, 10});

void BM_EnumerateFrobenius(benchmark::State& state) {
    long long count = 0;
    for (auto _ : state) {
        count = 0;
        enumerate_frobenius(3, 12, [&](const FrobeniusPartition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.counters["members"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateFrobenius);

void BM_ConstantTermProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int order = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(constant_term_product(n, order));
}
BENCHMARK(BM_ConstantTermProduct)->Args({2, 14})->Args({4, 15});

void BM_KernelGf(benchmark::State& state) {
    auto ks = kernel_structure(parse_colour_sequence("a1b2,a3b1,a2b2,a4b3,a3b2"));
    for (auto _ : state)
        for (int m = 0; m <= 6; ++m)
            benchmark::DoNotOptimize(kernel_gf(ks, m, KernelGfForm::Frobenius, 30));
}
BENCHMARK(BM_KernelGf);

void BM_PairTransform(benchmark::State& state) {
    auto table = builtin_delta_gamma(TableVariant::MeurmanPrimc, 3);
    auto lambda = parse_partition(
        "8[a1b1]+6[a0b2]+6[a2b2]+5[a0b1]+5[a1b0]+4[a0b0]+4[a0b0]+3[a0b2]+3[a1b1]+3[a1b1]+"
        "3[a1b0]+2[a2b2]+2[a2b2]+2[a2b2]+2[a2b0]+1[a0b0]");
    for (auto _ : state) {
        auto pair = phi(lambda, table);
        benchmark::DoNotOptimize(phi_inverse(pair, table));
    }
}
BENCHMARK(BM_PairTransform);

}  // namespace

BENCHMARK_MAIN();
