#include <benchmark/benchmark.h>

#include <vector>

#include "bcert/bubble.hpp"
#include "bcert/certify.hpp"
#include "bcert/moments.hpp"
#include "bcert/poly.hpp"
#include "bcert/search.hpp"

namespace {

using bcert::exact::Rational;
using bcert::exact::RatInterval;

void BM_CertifyExact(benchmark::State& state) {
    long n = state.range(0);
    std::vector<Rational> tail = bcert::poly::builtin_tail_d6();
    for (auto _ : state) {
        auto cert = bcert::certify::certify_dimension(n, tail);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_CertifyExact)->Arg(35)->Arg(62);

void BM_MomentRow(benchmark::State& state) {
    RatInterval Tc(Rational(-1, 100));
    Rational prec(1, 1L << 20);
    for (auto _ : state) {
        auto row = bcert::moments::moment_general_row(35, 12, Tc, prec);
        benchmark::DoNotOptimize(row);
    }
}
BENCHMARK(BM_MomentRow);

void BM_IntervalAtom(benchmark::State& state) {
    // depth 0: a single box evaluation, no subdivision
    std::vector<Rational> tail = bcert::poly::builtin_tail_d6();
    RatInterval Tc(Rational(-1, 1024), Rational(0));
    Rational prec(1, 1L << 20);
    for (auto _ : state) {
        auto cert = bcert::certify::certify_interval(35, tail, Tc, prec, 0);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_IntervalAtom);

void BM_FeasibilityMargin(benchmark::State& state) {
    std::vector<double> tail;
    for (const Rational& t : bcert::poly::builtin_tail_d6())
        tail.push_back(t.to_double());
    for (auto _ : state) {
        double m = bcert::search::feasibility_margin(35, tail, 0.0);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_FeasibilityMargin);

void BM_OrthogonalityQuadrature(benchmark::State& state) {
    for (auto _ : state) {
        double r = bcert::bubble::orthogonality_residual(35, -0.1, 35, 1e-10);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_OrthogonalityQuadrature);

}  // namespace

BENCHMARK_MAIN();
