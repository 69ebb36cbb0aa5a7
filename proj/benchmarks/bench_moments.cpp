#include <benchmark/benchmark.h>

#include <random>

#include "multimom/combinatorics.hpp"
#include "multimom/numeric_moments.hpp"
#include "multimom/oracle.hpp"
#include "multimom/sampler.hpp"
#include "multimom/symbolic_moments.hpp"

using namespace multimom;

namespace {

Rational rat(long num, long den) { return Rational(Integer(num), Integer(den)); }

MultinomialParams desk_params() {
  return MultinomialParams(Integer(6), {rat(1, 6), rat(1, 4), rat(1, 3)});
}

}  // namespace

static void BM_StirlingWarmLookup(benchmark::State& state) {
  stirling2(64, 32);  // prime the table
  for (auto _ : state) {
    benchmark::DoNotOptimize(stirling2(64, 32));
  }
}
BENCHMARK(BM_StirlingWarmLookup);

static void BM_StirlingColdTable(benchmark::State& state) {
  const unsigned max_p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    StirlingTable table(max_p);
    benchmark::DoNotOptimize(table.at(max_p, max_p / 2));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StirlingColdTable)->Range(16, 256)->Complexity();

static void BM_NoncentralMoment(benchmark::State& state) {
  auto params = desk_params();
  const unsigned order = static_cast<unsigned>(state.range(0));
  MultiIndex p{order, order, order};
  for (auto _ : state) {
    benchmark::DoNotOptimize(noncentral_moment(params, p));
  }
}
BENCHMARK(BM_NoncentralMoment)->Arg(1)->Arg(2)->Arg(3);

static void BM_CentralMoment(benchmark::State& state) {
  auto params = desk_params();
  const unsigned order = static_cast<unsigned>(state.range(0));
  MultiIndex p{order, order, order};
  for (auto _ : state) {
    benchmark::DoNotOptimize(central_moment(params, p));
  }
}
BENCHMARK(BM_CentralMoment)->Arg(1)->Arg(2)->Arg(3);

static void BM_SymbolicCentral(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  Pattern pattern{order, order};
  for (auto _ : state) {
    benchmark::DoNotOptimize(symbolic_central(pattern));
  }
}
BENCHMARK(BM_SymbolicCentral)->DenseRange(2, 4);

static void BM_CatalogRaw(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(catalog(order, /*central=*/false));
  }
}
BENCHMARK(BM_CatalogRaw)->DenseRange(4, 8, 2);

static void BM_OracleMoment(benchmark::State& state) {
  auto params = desk_params();
  MultiIndex p{2, 2, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_moment(params, p, MomentKind::central));
  }
}
BENCHMARK(BM_OracleMoment);

static void BM_SamplerDraws(benchmark::State& state) {
  MultinomialParams params(Integer(20), {rat(1, 4), rat(1, 3)});
  MultinomialSampler sampler(params);
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.draw(rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SamplerDraws);

BENCHMARK_MAIN();
