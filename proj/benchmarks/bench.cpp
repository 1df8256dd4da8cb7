#include <benchmark/benchmark.h>

#include "eaqecc/bounds.hpp"
#include "eaqecc/concat.hpp"
#include "eaqecc/error_model.hpp"
#include "eaqecc/families.hpp"

using namespace eaqecc;

static void BM_SphereCount(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(hamming_sphere_count(n, n / 4));
}
BENCHMARK(BM_SphereCount)->Arg(40)->Arg(200)->Arg(1000);

static void BM_ScanEahb(benchmark::State& state)
{
    const FamilySpec outer = family("rep_even");
    const EaCode inner = named_code("C4");
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_eahb(outer, inner, outer.n_min, state.range(0)));
}
BENCHMARK(BM_ScanEahb)->Arg(110)->Unit(benchmark::kMillisecond);

static void BM_Concat(benchmark::State& state)
{
    const EaCode a(6, 3, 3, 2), b(7, 3, 3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(both_orders(a, b));
}
BENCHMARK(BM_Concat);

static void BM_Compose(benchmark::State& state)
{
    const ErrorPolynomial outer = named_polynomial("five13"), inner = named_polynomial("rep3132");
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(outer, inner));
}
BENCHMARK(BM_Compose)->Unit(benchmark::kMicrosecond);

static void BM_Pseudothreshold(benchmark::State& state)
{
    const ErrorPolynomial f = compose(named_polynomial("four131"), named_polynomial("five13"));
    for (auto _ : state)
        benchmark::DoNotOptimize(pseudothreshold(f));
}
BENCHMARK(BM_Pseudothreshold)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
