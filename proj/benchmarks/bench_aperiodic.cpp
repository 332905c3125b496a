#include "aperiodic/annihilator.hpp"
#include "aperiodic/decomposition.hpp"
#include "aperiodic/delone.hpp"
#include "aperiodic/examples.hpp"
#include "aperiodic/forced.hpp"
#include "aperiodic/period.hpp"

#include <benchmark/benchmark.h>

using namespace aperiodic;

namespace {

// Dense product of two polynomials with n x n supports.
void BM_PolyMul(benchmark::State& state) {
    const auto b = ExponentBasis::standard(2);
    const long n = state.range(0);
    LaurentPoly f(b);
    LaurentPoly g(b);
    IntBox({0, 0}, {n - 1, n - 1}).for_each([&](const GroupPoint& u) {
        f += LaurentPoly::monomial(b, u, Rational(u[0] + 1) / Rational(u[1] + 2));
        g += LaurentPoly::monomial(b, u, Rational(u[0] - u[1]) + 1);
    });
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);

void BM_PatchCountFibonacci(benchmark::State& state) {
    const PointCloud fib = fibonacci_cloud(0, Rational(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(patch_count(fib, 8).count);
    state.counters["points"] = static_cast<double>(fib.size());
}
BENCHMARK(BM_PatchCountFibonacci)->Arg(200)->Arg(800)->Arg(3200);

void BM_VerifyTorus(benchmark::State& state) {
    const Configuration c = torus_config(Rational(1, 3), Rational(2, 7), Rational(5, 11));
    const LaurentPoly f = torus_annihilator();
    const long n = state.range(0);
    const IntBox probes({0, 0}, {n - 1, n - 1});
    for (auto _ : state) benchmark::DoNotOptimize(verify_annihilator(f, c, probes).verified);
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_VerifyTorus)->Arg(25)->Arg(100);

void BM_DecomposeTorus(benchmark::State& state) {
    const Configuration c = torus_config(Rational(1, 3), Rational(2, 7), Rational(5, 11));
    const std::vector<GroupPoint> dirs{GroupPoint{1, -1}, GroupPoint{0, 1}, GroupPoint{1, 0}};
    const IntBox window = IntBox::cube(2, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(c, dirs, window).certified);
}
BENCHMARK(BM_DecomposeTorus)->Arg(8)->Arg(16)->Arg(32);

void BM_PeriodDetection(benchmark::State& state) {
    const PointCloud z = integer_cloud(3, 0, Rational(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(detect_period_1d(z, 6).period);
}
BENCHMARK(BM_PeriodDetection)->Arg(300)->Arg(3000);

void BM_MeyerHT(benchmark::State& state) {
    const PointCloud fib = fibonacci_cloud(0, 200);
    for (auto _ : state) benchmark::DoNotOptimize(meyer_ht(fib, state.range(0)).holds);
}
BENCHMARK(BM_MeyerHT)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
