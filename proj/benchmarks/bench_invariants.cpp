/**
 * @file bench_invariants.cpp
 * @brief Timings of the main evaluation paths: closed forms, diagram plans, integrals and
 *        Drinfeld twists on representative algebras.
 */
#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "kup/diagram/builders.hpp"
#include "kup/hopf/integrals.hpp"
#include "kup/hopf/selector.hpp"
#include "kup/invariants/closed_forms.hpp"
#include "kup/invariants/kuperberg.hpp"
#include "kup/twist/cocycle.hpp"

namespace {

using namespace kup;

const HopfData& algebra(const char* sel) {
    static std::map<std::string, HopfData> cache;
    auto it = cache.find(sel);
    if (it == cache.end()) it = cache.emplace(sel, algebra_from_selector(sel)).first;
    return it->second;
}

void BM_LensClosedTaft7(benchmark::State& state) {
    const HopfData& h = algebra("taft:7");
    const IntegralData I = integrals(h);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lens_fR_closed(7, k, h, I));
}
BENCHMARK(BM_LensClosedTaft7)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_LensPlanTaft7(benchmark::State& state) {
    const HopfData& h = algebra("taft:7");
    const IntegralData I = integrals(h);
    const EvalPlan p = lens_fR_plan(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kuperberg(p, h, I));
}
BENCHMARK(BM_LensPlanTaft7)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_LensPlanByN(benchmark::State& state) {
    const HopfData& h = algebra("taft:4");
    const IntegralData I = integrals(h);
    const int n = static_cast<int>(state.range(0));
    const EvalPlan p = lens_fR_plan(n, n - 1);
    for (auto _ : state) benchmark::DoNotOptimize(kuperberg(p, h, I));
}
BENCHMARK(BM_LensPlanByN)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Genus2Closed(benchmark::State& state) {
    const HopfData& h = algebra("taft:4");
    const IntegralData I = integrals(h);
    for (auto _ : state) benchmark::DoNotOptimize(genus2(2, 2, h, I));
}
BENCHMARK(BM_Genus2Closed)->Unit(benchmark::kMillisecond);

void BM_SeifertPlan(benchmark::State& state, const char* sel) {
    const HopfData& h = algebra(sel);
    const IntegralData I = integrals(h);
    const EvalPlan p = compile_plan(seifert_diagram(2, 2));
    for (auto _ : state) benchmark::DoNotOptimize(kuperberg(p, h, I));
}
BENCHMARK_CAPTURE(BM_SeifertPlan, taft4, "taft:4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SeifertPlan, dual_d8, "dual:group:D8")->Unit(benchmark::kMillisecond);

void BM_Integrals(benchmark::State& state, const char* sel) {
    const HopfData& h = algebra(sel);
    for (auto _ : state) benchmark::DoNotOptimize(integrals(h));
}
BENCHMARK_CAPTURE(BM_Integrals, taft7, "taft:7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Integrals, taft2_x_taft2, "tensor:taft:2,taft:2")->Unit(benchmark::kMillisecond);

void BM_DrinfeldTwist(benchmark::State& state) {
    const HopfData& h = algebra("taft:4");
    const TwoCocycle c = cocycle_from_selector(h, "taft-bichar:1");
    for (auto _ : state) benchmark::DoNotOptimize(drinfeld_twist(h, c));
}
BENCHMARK(BM_DrinfeldTwist)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
