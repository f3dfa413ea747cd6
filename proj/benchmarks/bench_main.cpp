#include <benchmark/benchmark.h>

#include "qcf/cfrac.hpp"
#include "qcf/objects.hpp"
#include "qcf/qseries.hpp"
#include "qcf/verifier.hpp"

using namespace qcf;
using M = Monomial<Rat>;
using S = Series<Rat>;

namespace {

S dense(int order) {
  S s(order, 1);
  for (int k = 0; k <= order; ++k) s[k] = Rat(k % 7 - 3, k % 5 + 1);
  return s;
}

void BM_SeriesMul(benchmark::State& st) {
  const int O = static_cast<int>(st.range(0));
  const S x = dense(O), y = dense(O);
  for (auto _ : st) benchmark::DoNotOptimize(x * y);
  st.SetComplexityN(O);
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_SeriesInverse(benchmark::State& st) {
  const int O = static_cast<int>(st.range(0));
  S x = dense(O);
  x[0] = Rat(1);
  for (auto _ : st) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_SeriesInverse)->RangeMultiplier(2)->Range(16, 256);

void BM_ConvergentsH(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  const HParams<Rat> p{M(Rat(1, 2)), M(Rat(-3)), M(Rat(2, 3)), M(Rat(5)), 1};
  for (auto _ : st) benchmark::DoNotOptimize(convergents(cf_H(p, 50), N));
}
BENCHMARK(BM_ConvergentsH)->Arg(10)->Arg(20)->Arg(40);

void BM_ExplicitAN(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  const HParams<Rat> p{M(Rat(1, 2)), M(Rat(-3)), M(Rat(2, 3)), M(Rat(5)), 1};
  for (auto _ : st) benchmark::DoNotOptimize(explicit_A_N(p, N, 50));
}
BENCHMARK(BM_ExplicitAN)->Arg(6)->Arg(12);

void BM_HyperSumRR(benchmark::State& st) {
  const int O = static_cast<int>(st.range(0));
  TermSpec<Rat> t;
  t.quad2 = 2;
  t.den.push_back({M(Rat(1), 1)});
  for (auto _ : st) benchmark::DoNotOptimize(hyper_sum(t, O, 1));
}
BENCHMARK(BM_HyperSumRR)->Arg(50)->Arg(100)->Arg(200);

void BM_Verify(benchmark::State& st, const char* id) {
  for (auto _ : st) benchmark::DoNotOptimize(verify(id, 30, 2, 0));
}
BENCHMARK_CAPTURE(BM_Verify, rr_sum_product, "RR_SUM_PRODUCT")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, q2q3, "Q2Q3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, absym1, "ABSYM1")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
