#include <benchmark/benchmark.h>

#include "galois/classify.hpp"
#include "galois/exact.hpp"
#include "galois/resolvent.hpp"
#include "galois/roots.hpp"

using galois::Integer;
using galois::IntPoly;

namespace {

const IntPoly kS5 = IntPoly::from_desc({1, 0, 0, 0, -1, -1});
const IntPoly kC5 = IntPoly::from_desc({1, 0, -10, 5, 10, 1});
const IntPoly kD10 = IntPoly::from_desc({1, 0, 0, 0, -5, 12});
const IntPoly kC4 = IntPoly::from_desc({1, 0, 0, 5, 5});

void BM_ClassifyQuinticExactOnly(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(galois::classify(kS5));
}
BENCHMARK(BM_ClassifyQuinticExactOnly);

void BM_ClassifyQuinticNumericPhase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(galois::classify(kC5));
}
BENCHMARK(BM_ClassifyQuinticNumericPhase);

void BM_ClassifyQuarticKappeWarren(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(galois::classify(kC4));
}
BENCHMARK(BM_ClassifyQuarticKappeWarren);

void BM_ResolventSextic(benchmark::State& state) {
  const Integer p = -10, q = 5, r = 10, s = 1;
  for (auto _ : state) benchmark::DoNotOptimize(galois::resolvent_sextic(p, q, r, s));
}
BENCHMARK(BM_ResolventSextic);

void BM_AllRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(galois::all_roots(kD10));
}
BENCHMARK(BM_AllRoots);

void BM_ThetaOrderingScan(benchmark::State& state) {
  const galois::RootSet rs = galois::all_roots(kD10);
  for (auto _ : state) benchmark::DoNotOptimize(galois::theta_matches(rs, 40));
}
BENCHMARK(BM_ThetaOrderingScan);

void BM_Isqrt(benchmark::State& state) {
  const Integer n = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(galois::isqrt(n));
}
BENCHMARK(BM_Isqrt)->Arg(18)->Arg(40)->Arg(80);

void BM_IntegerRootsResolvent(benchmark::State& state) {
  const IntPoly r6 = galois::resolvent_sextic(0, 0, 15, 12);
  for (auto _ : state) benchmark::DoNotOptimize(galois::integer_roots(r6));
}
BENCHMARK(BM_IntegerRootsResolvent);

void BM_DedekindCheck(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(galois::dedekind_check(kC5, galois::GaloisGroup::C5,
                                                    static_cast<uint32_t>(state.range(0))));
}
BENCHMARK(BM_DedekindCheck)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
