#include <benchmark/benchmark.h>

#include "exotica/exotica.hpp"

namespace {

using namespace exotica;

void BM_PolynomialMultiply(benchmark::State& state) {
  const long e = state.range(0);
  Polynomial f = parse_polynomial("x + y + z + 1").pow(e);
  Polynomial g = parse_polynomial("x - y + 2*z - 1").pow(e);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_UniGcd(benchmark::State& state) {
  const long n = state.range(0);
  UniPoly common = UniPoly::from_polynomial(parse_polynomial("t^3 - 2*t + 7"));
  UniPoly a = UniPoly::from_polynomial(parse_polynomial("t + 3").pow(n)) * common;
  UniPoly b = UniPoly::from_polynomial(parse_polynomial("t^2 + i").pow(n)) * common;
  for (auto _ : state) benchmark::DoNotOptimize(uni_gcd(a, b));
}
BENCHMARK(BM_UniGcd)->Arg(5)->Arg(10)->Arg(20);

void BM_DavenportSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(davenport_search(3, 2, 1, state.range(0)));
}
BENCHMARK(BM_DavenportSearch)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CurveSearch(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(curve_search({2, 2, 2}, {state.range(0), 1, 0}));
}
BENCHMARK(BM_CurveSearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BrieskornSweep(benchmark::State& state) {
  const long top = state.range(0);
  for (auto _ : state) {
    long agree = 0;
    for (long k = 2; k <= top; ++k)
      for (long l = 2; l <= top; ++l)
        for (long m = 2; m <= top; ++m) {
          BrieskornTriple t(k, l, m);
          agree += quasirational_brieskorn(t).quasirational == (genus_quotient(brieskorn_weights(t)) == 0);
        }
    benchmark::DoNotOptimize(agree);
  }
}
BENCHMARK(BM_BrieskornSweep)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_VerifyExotic(benchmark::State& state) {
  ExoticParams p(5, 4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_exotic(p));
}
BENCHMARK(BM_VerifyExotic)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
