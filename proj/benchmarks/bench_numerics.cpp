#include <benchmark/benchmark.h>

#include "kummer/context.hpp"
#include "kummer/gamma.hpp"
#include "kummer/hypergeometric.hpp"
#include "kummer/summation.hpp"

namespace {

using namespace kummer;

void BM_Gamma(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)));
  const Scalar z = parse_scalar("3.7-2.1i", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(gamma(z, ctx));
}
BENCHMARK(BM_Gamma)->Arg(30)->Arg(50)->Arg(100);

void BM_RGammaNegativeHalfInteger(benchmark::State& state) {
  const auto ctx = make_context(50);
  const Scalar z = parse_scalar("-7.5", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(rgamma(z, ctx));
}
BENCHMARK(BM_RGammaNegativeHalfInteger);

void BM_Hyp0F1(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)));
  const HyperParams p{{}, {parse_scalar("0.5", ctx)}, parse_scalar("0.25", ctx)};
  for (auto _ : state) benchmark::DoNotOptimize(pfq(p, ctx));
}
BENCHMARK(BM_Hyp0F1)->Arg(30)->Arg(50)->Arg(100);

void BM_Hyp2F1MinusOne(benchmark::State& state) {
  const auto ctx = make_context(50);
  const Scalar a = parse_scalar("0.3+0.2i", ctx);
  const Scalar b = parse_scalar("1.7", ctx);
  const Scalar c = parse_scalar("2.9-1i", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1_minus_one(a, b, c, ctx));
}
BENCHMARK(BM_Hyp2F1MinusOne);

void BM_KummerGeneralMinus(benchmark::State& state) {
  const auto ctx = make_context(50);
  const KummerInput in{parse_scalar("2.3", ctx), parse_scalar("0.4", ctx), state.range(0),
                       Mode::Corrected};
  for (auto _ : state) benchmark::DoNotOptimize(kummer_general_minus(in, ctx));
}
BENCHMARK(BM_KummerGeneralMinus)->DenseRange(0, 5);

}  // namespace
