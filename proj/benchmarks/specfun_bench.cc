#include <benchmark/benchmark.h>

#include "zetareg/lfactor.hpp"
#include "zetareg/regdet.hpp"
#include "zetareg/specfun.hpp"

namespace zetareg {
namespace {

void BM_HurwitzZeta(benchmark::State& state) {
  const Complex s(0.5, static_cast<double>(state.range(0)));
  const Complex a(0.7, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(s, a));
}
BENCHMARK(BM_HurwitzZeta)->Arg(1)->Arg(10)->Arg(100);

void BM_HurwitzZetaDs0(benchmark::State& state) {
  const Complex a(0.3, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta_ds0(a));
}
BENCHMARK(BM_HurwitzZetaDs0);

void BM_LogGamma(benchmark::State& state) {
  const Complex z(static_cast<double>(state.range(0)) - 0.5, 1.25);
  for (auto _ : state) benchmark::DoNotOptimize(log_gamma(z));
}
BENCHMARK(BM_LogGamma)->Arg(-20)->Arg(1)->Arg(50);

void BM_QGamma(benchmark::State& state) {
  const double tol = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_gamma(0.5, 0.9, tol));
}
BENCHMARK(BM_QGamma)->Arg(1'000)->Arg(1'000'000'000);

void BM_FullLineNumeric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(regdet_fullline_numeric(kI, Complex(0.3, 0.1)));
}
BENCHMARK(BM_FullLineNumeric);

void BM_RealPlaceLFactor(benchmark::State& state) {
  const auto spec = LFactorSpec::real(+1, Complex(2.0, 3.0),
                                      std::vector<Complex>(static_cast<std::size_t>(state.range(0)),
                                                           Complex(0.5, 0.0)));
  for (auto _ : state) benchmark::DoNotOptimize(l_factor(spec));
}
BENCHMARK(BM_RealPlaceLFactor)->Arg(1)->Arg(8);

}  // namespace
}  // namespace zetareg
