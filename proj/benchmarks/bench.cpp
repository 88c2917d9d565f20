#include <benchmark/benchmark.h>

#include "nsg/constructions.hpp"
#include "nsg/harness/hunt.hpp"
#include "nsg/ideal.hpp"
#include "nsg/toric.hpp"

namespace {

const std::vector<std::vector<nsg::Integer>> kSemigroups{
    {3, 5, 7},
    {5, 6, 7, 8, 9},
    {20, 21, 30, 35, 49},
    {13, 14, 15, 16, 17, 18, 21, 23},
    {70, 84, 99, 105, 121},
    {266, 300, 325, 418, 475, 725},
};

void BM_Construct(benchmark::State& state) {
  const auto& gens = kSemigroups[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(nsg::NumericalSemigroup::from_generators(gens));
}
BENCHMARK(BM_Construct)->DenseRange(0, 5);

void BM_Trace(benchmark::State& state) {
  const auto s = nsg::NumericalSemigroup::from_generators(kSemigroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(nsg::trace_and_residue(s));
}
BENCHMARK(BM_Trace)->DenseRange(0, 5);

void BM_ToricGb(benchmark::State& state) {
  const auto s = nsg::NumericalSemigroup::from_generators(kSemigroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(nsg::toric_groebner_basis(s));
}
BENCHMARK(BM_ToricGb)->DenseRange(0, 5);

// The elimination route, only on inputs where it finishes quickly.
void BM_EliminationGb(benchmark::State& state) {
  const auto s = nsg::NumericalSemigroup::from_generators(kSemigroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(nsg::elimination_groebner_basis(s));
}
BENCHMARK(BM_EliminationGb)->DenseRange(0, 3);

void BM_ArithmeticGb(benchmark::State& state) {
  const auto n1 = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(nsg::arithmetic_gb(n1, 1, n1));
}
BENCHMARK(BM_ArithmeticGb)->DenseRange(4, 12, 4);

void BM_Hunt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nsg::harness::run_hunt(state.range(0), 1));
}
BENCHMARK(BM_Hunt)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
