// Micro-benchmarks for the hot paths: sequence sampling, order decisions,
// approximation and the semi-metric.

#include <benchmark/benchmark.h>

#include "orc/approximation.hpp"
#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"
#include "orc/topology.hpp"

namespace {

orc::OrientedReal slow_cut() {
  return orc::cut_from_bounded_sequence(
      [](std::uint64_t n) {
        return orc::Rational(1, 3) -
               orc::Rational(1, static_cast<long>(n) + 2);
      },
      orc::Rational(1, 3));
}

void BM_SampleColdCut(benchmark::State& state) {
  for (auto _ : state) {
    orc::OrientedReal a = slow_cut();
    benchmark::DoNotOptimize(a.at(static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_SampleColdCut)->Arg(64)->Arg(512);

void BM_SampleMemoized(benchmark::State& state) {
  orc::OrientedReal a = slow_cut();
  a.at(512);
  for (auto _ : state) benchmark::DoNotOptimize(a.at(512));
}
BENCHMARK(BM_SampleMemoized);

void BM_LtEmbedded(benchmark::State& state) {
  orc::OrientedReal a = orc::embed_rational(orc::Rational(355, 113));
  orc::OrientedReal b = orc::embed_rational(orc::Rational(22, 7));
  for (auto _ : state) benchmark::DoNotOptimize(orc::lt(a, b, 1024));
}
BENCHMARK(BM_LtEmbedded);

void BM_LtSampled(benchmark::State& state) {
  orc::OrientedReal a = slow_cut();
  orc::OrientedReal b = orc::embed_rational(orc::Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(orc::lt(a, b, 1024));
}
BENCHMARK(BM_LtSampled);

void BM_Approximate(benchmark::State& state) {
  for (auto _ : state) {
    orc::AlmostRational z =
        orc::approximate(slow_cut(), static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(z.at(128));
  }
}
BENCHMARK(BM_Approximate)->Arg(2)->Arg(8);

void BM_DistanceCheck(benchmark::State& state) {
  orc::OrientedReal a = slow_cut();
  orc::OrientedReal b = orc::embed_rational(orc::Rational(3, 8));
  for (auto _ : state)
    benchmark::DoNotOptimize(orc::d_check(a, b, orc::Rational(1, 4), 256));
}
BENCHMARK(BM_DistanceCheck);

}  // namespace

BENCHMARK_MAIN();
