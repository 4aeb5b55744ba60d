#include <benchmark/benchmark.h>

#include "ringlab/io.hpp"

using namespace ringlab;

namespace {

FiniteRing catalog(const std::string& name) { return io::build("@" + name); }

void BM_Construct(benchmark::State& state, const std::string& source) {
  for (auto _ : state) benchmark::DoNotOptimize(io::build(source));
}
BENCHMARK_CAPTURE(BM_Construct, z12, "Z 12");
BENCHMARK_CAPTURE(BM_Construct, m2f2, "M 2 (Z 2)");
BENCHMARK_CAPTURE(BM_Construct, t3f2, "T 3 (Z 2)");

void BM_EnumerateIdeals(benchmark::State& state, const std::string& name) {
  FiniteRing R = catalog(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(R));
}
BENCHMARK_CAPTURE(BM_EnumerateIdeals, z12, "z12");
BENCHMARK_CAPTURE(BM_EnumerateIdeals, t3f2, "t3f2");
BENCHMARK_CAPTURE(BM_EnumerateIdeals, z4xm2f2, "z4xm2f2");

void BM_MaxDen(benchmark::State& state, const std::string& name) {
  FiniteRing R = catalog(name);
  for (auto _ : state) benchmark::DoNotOptimize(max_denominator_sets(R));
}
BENCHMARK_CAPTURE(BM_MaxDen, z12, "z12");
BENCHMARK_CAPTURE(BM_MaxDen, m2f2, "m2f2");
BENCHMARK_CAPTURE(BM_MaxDen, t3f2, "t3f2");

void BM_ExhaustiveDenominatorSets(benchmark::State& state, const std::string& name) {
  FiniteRing R = catalog(name);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_denominator_sets(R));
}
BENCHMARK_CAPTURE(BM_ExhaustiveDenominatorSets, z12, "z12");
BENCHMARK_CAPTURE(BM_ExhaustiveDenominatorSets, m2f2, "m2f2");

void BM_FractionOracle(benchmark::State& state) {
  FiniteRing z6 = catalog("z6");
  Subset odds = Subset::of(6, {1, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(fraction_oracle(z6, odds));
}
BENCHMARK(BM_FractionOracle);

void BM_VerifyAll(benchmark::State& state, const std::string& name) {
  FiniteRing R = catalog(name);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(R));
}
BENCHMARK_CAPTURE(BM_VerifyAll, z12, "z12");
BENCHMARK_CAPTURE(BM_VerifyAll, t3f2, "t3f2");

}  // namespace

BENCHMARK_MAIN();
