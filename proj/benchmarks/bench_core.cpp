#include <nullag/nullag.hpp>

#include <benchmark/benchmark.h>

using namespace nullag;

static void BM_EulerLagrangeSigma6(benchmark::State& state) {
    const Expr L = krivonos(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_lagrange(L));
    }
}
BENCHMARK(BM_EulerLagrangeSigma6)->Unit(benchmark::kMillisecond);

static void BM_JacobiSigma5(benchmark::State& state) {
    const Expr L = krivonos(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobi(L));
    }
}
BENCHMARK(BM_JacobiSigma5)->Unit(benchmark::kMillisecond);

static void BM_GaugeSigma6(benchmark::State& state) {
    const Expr L = krivonos(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_gauge(L));
    }
}
BENCHMARK(BM_GaugeSigma6)->Unit(benchmark::kMillisecond);

static void BM_FiniteSl2(benchmark::State& state) {
    const Expr e = krivonos(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sl2_finite_check(e));
    }
}
BENCHMARK(BM_FiniteSl2)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Normalize(benchmark::State& state) {
    const std::string src = "q'''/q' - 3/2*(q''/q')^2 + (q''/q')^3*(q'^2 + q)/(q' + 1)";
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_expr(src));
    }
}
BENCHMARK(BM_Normalize)->Unit(benchmark::kMicrosecond);

static void BM_Rk4L2(benchmark::State& state) {
    const ODESystem sys = derive_ode(lagrangian_l2());
    const std::vector<double> init{0.0, 1.0, 1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_rk4(sys, init, 0.0, 1.0, 1e-3));
    }
}
BENCHMARK(BM_Rk4L2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
