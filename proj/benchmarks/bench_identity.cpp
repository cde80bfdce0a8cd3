#include <benchmark/benchmark.h>

#include "kummer/context.hpp"
#include "kummer/identity.hpp"

namespace {

using namespace kummer;

IdentityCase sample(const PrecisionContext& ctx, Theorem t, long i) {
  return normalized(IdentityCase{t, parse_scalar("1.3", ctx), i, parse_scalar("0.5", ctx),
                                 parse_delta_spec("harmonic", ctx), Mode::Corrected});
}

void BM_RhsTheorem(benchmark::State& state) {
  const auto ctx = make_context(50);
  const IdentityCase c = sample(ctx, static_cast<Theorem>(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rhs_theorem(c, ctx));
}
BENCHMARK(BM_RhsTheorem)->ArgsProduct({{0, 1, 2, 3}, {0, 2, 5}});

void BM_LhsDoubleSeries(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)));
  const IdentityCase c = sample(ctx, Theorem::T21, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lhs_double_series(c, ctx));
}
BENCHMARK(BM_LhsDoubleSeries)->Arg(30)->Arg(50)->Arg(100);

void BM_Verify(benchmark::State& state) {
  const auto ctx = make_context(50);
  const IdentityCase c = sample(ctx, Theorem::T23, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify(c, ctx));
}
BENCHMARK(BM_Verify);

}  // namespace
