#include <benchmark/benchmark.h>

#include "convsum/alzer.hpp"
#include "convsum/riemann_sums.hpp"

using namespace convsum;

namespace {

const FunctionSpec& square() {
    static const FunctionSpec spec =
        FunctionSpec::power(Rational(2), Interval(Rational(0), Rational(1)));
    return spec;
}

void BM_compute_sums_exact(benchmark::State& state) {
    const auto mode = NumericMode::exact();
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_sums(square(), n, mode));
    }
}
BENCHMARK(BM_compute_sums_exact)->Arg(16)->Arg(128)->Arg(1024);

void BM_compute_sums_float(benchmark::State& state) {
    const auto mode = NumericMode::floating();
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_sums(square(), n, mode));
    }
}
BENCHMARK(BM_compute_sums_float)->Arg(16)->Arg(1024)->Arg(65536);

void BM_refined_bounds_integer_r(benchmark::State& state) {
    const auto mode = NumericMode::floating();
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(refined_bounds(n, Rational(3), mode));
    }
}
BENCHMARK(BM_refined_bounds_integer_r)->Arg(16)->Arg(128)->Arg(1024);

void BM_refined_bounds_fractional_r(benchmark::State& state) {
    const auto mode = NumericMode::floating();
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(refined_bounds(n, Rational(1, 2), mode));
    }
}
BENCHMARK(BM_refined_bounds_fractional_r)->Arg(16)->Arg(128)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
