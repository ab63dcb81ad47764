#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ivopt/io.hpp"
#include "ivopt/problems.hpp"

using namespace ivopt;

namespace {

std::vector<Interval> random_intervals(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> mid(-10.0, 10.0);
    std::uniform_real_distribution<double> wid(0.0, 5.0);
    std::vector<Interval> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = mid(rng);
        v.emplace_back(lo, lo + wid(rng));
    }
    return v;
}

void bm_interval_ops(benchmark::State& state) {
    const auto xs = random_intervals(1024, 1);
    const auto ys = random_intervals(1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        const Interval& a = xs[i & 1023];
        const Interval& b = ys[i & 1023];
        benchmark::DoNotOptimize(add(a, b));
        benchmark::DoNotOptimize(mul(a, b));
        benchmark::DoNotOptimize(gh_difference(a, b));
        benchmark::DoNotOptimize(compare(a, b));
        ++i;
    }
}
BENCHMARK(bm_interval_ops);

void bm_gh_gradient_numeric(benchmark::State& state) {
    Ivf f = example_5_2();
    f.gradient = nullptr;
    const Point x{1.5, 4.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(gh_gradient_numeric(f, x));
}
BENCHMARK(bm_gh_gradient_numeric);

void bm_solve_example_5_2(benchmark::State& state) {
    const Ivf f = example_5_2();
    SolverConfig cfg;
    cfg.weights = WeightPair(0.5);
    cfg.x0 = {0.0, 6.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_w_gradient(f, cfg));
}
BENCHMARK(bm_solve_example_5_2)->Unit(benchmark::kMillisecond);

void bm_error_gradient_poly(benchmark::State& state) {
    const ModelSpec m = ModelSpec::polynomial(Interval(1.70, 12.00));
    const IntervalDataset data =
        parse_interval_csv(std::string(DATA_DIR) + "/table3_polynomial.csv");
    const std::vector<double> beta{-0.09, -0.28, 0.54};
    for (auto _ : state)
        benchmark::DoNotOptimize(error_gradient(m, data, beta));
}
BENCHMARK(bm_error_gradient_poly);

void bm_fit_polynomial(benchmark::State& state) {
    const ModelSpec m = ModelSpec::polynomial(Interval(1.70, 12.00));
    const IntervalDataset data =
        parse_interval_csv(std::string(DATA_DIR) + "/table3_polynomial.csv");
    for (auto _ : state)
        benchmark::DoNotOptimize(fit(m, data, {6, -8, 9}, WeightPair(0.5), SolverConfig{}));
}
BENCHMARK(bm_fit_polynomial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
