#include <benchmark/benchmark.h>

#include "hopfq/constructors.hpp"
#include "hopfq/graded.hpp"
#include "hopfq/group.hpp"
#include "hopfq/group_cohomology.hpp"
#include "hopfq/heis_torus.hpp"
#include "hopfq/hopf_verify.hpp"
#include "hopfq/pbw.hpp"
#include "hopfq/scalar_parse.hpp"

using namespace hopfq;

static void BM_CyclotomicMul(benchmark::State& state) {
  const Cyclotomic a = Cyclotomic::root_of_unity(1, 15) + Cyclotomic(Rational(2, 3));
  const Cyclotomic b = Cyclotomic::root_of_unity(2, 21) - Cyclotomic(5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul);

static void BM_SeriesExp(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Scalar x = parse_scalar("tau*h + z(5,1)*h^2", k);
  for (auto _ : state) benchmark::DoNotOptimize(series_exp(x));
}
BENCHMARK(BM_SeriesExp)->Arg(4)->Arg(8)->Arg(12);

static void BM_VerifyHopf(benchmark::State& state) {
  const HopfPresentation h =
      state.range(0) == 0 ? group_algebra(dihedral_group_d4()) : taft(5, Cyclotomic::root_of_unity(1, 5));
  for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(h).passed());
}
BENCHMARK(BM_VerifyHopf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_GroupCoboundary(benchmark::State& state) {
  const FiniteGroup g = dihedral_group_d4();
  const GroupCochain f = GroupCochain::from_function(g, 2, [](const GroupCochain::Args& a) {
    return Scalar(static_cast<long long>(a[0] + 2 * a[1] + 1));
  });
  for (auto _ : state) benchmark::DoNotOptimize(group_coboundary(f).is_constant_one());
}
BENCHMARK(BM_GroupCoboundary)->Unit(benchmark::kMicrosecond);

static void BM_OctonionSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(octonion_suite(1, 10).passed());
}
BENCHMARK(BM_OctonionSuite)->Unit(benchmark::kMillisecond);

static void BM_HeisStar(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const HeisElement a = random_heis(1, 1, k);
  const HeisElement b = random_heis(2, 2, k);
  const Scalar theta = Series::hbar(k);
  for (auto _ : state) benchmark::DoNotOptimize(star(a, b, theta));
}
BENCHMARK(BM_HeisStar)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_StrongGrading(benchmark::State& state) {
  const auto battery = graded_battery(3);
  for (auto _ : state) {
    for (const auto& g : battery) benchmark::DoNotOptimize(strong_grading(g.algebra).strong);
  }
}
BENCHMARK(BM_StrongGrading)->Unit(benchmark::kMillisecond);

static void BM_Bch(benchmark::State& state) {
  const PbwHost h(1);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bch_residual(h, k).is_zero());
}
BENCHMARK(BM_Bch)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
