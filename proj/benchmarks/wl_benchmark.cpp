#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "harness.hpp"
#include "tglab/aggregators.hpp"
#include "tglab/generators.hpp"
#include "tglab/oracle.hpp"
#include "tglab/wl.hpp"

namespace {

using namespace tglab;

void BM_StaticWlCirculant(benchmark::State& state) {
  const SnapshotGraph g = gen::csl(19, 2);
  const int iters = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Session session;
    benchmark::DoNotOptimize(wl::static_wl(g, iters, session));
  }
}
BENCHMARK(BM_StaticWlCirculant)->Arg(2)->Arg(8);

void BM_VariantOnCirculantStack(benchmark::State& state) {
  const TemporalGraph g = gen::dyncsl_sample(19, {2, 3, 4, 5, 6, 2, 3, 4}).graph;
  const auto variant = static_cast<wl::Variant>(state.range(0));
  for (auto _ : state) {
    Session session;
    benchmark::DoNotOptimize(wl::run_variant(g, {variant, 2, {}}, session));
  }
}
BENCHMARK(BM_VariantOnCirculantStack)
    ->Arg(static_cast<int>(wl::Variant::kTimeAnd))
    ->Arg(static_cast<int>(wl::Variant::kGraphThenTime))
    ->Arg(static_cast<int>(wl::Variant::kTimeThen))
    ->Arg(static_cast<int>(wl::Variant::kScheduled));

void BM_DistinguishWitnessPair(benchmark::State& state) {
  const TemporalGraph a = gen::dyncsl_sample(19, {2, 2}).graph;
  const TemporalGraph b = gen::dyncsl_sample(19, {2, 3}).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wl::distinguish(a, b, {wl::Variant::kTimeThen, 2, {}}));
  }
}
BENCHMARK(BM_DistinguishWitnessPair);

void BM_BruteForceIsoCirculant(benchmark::State& state) {
  const TemporalGraph a = aggregate({gen::csl(7, 2)});
  const TemporalGraph b = aggregate({gen::csl(7, 3)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_force_iso(a, b));
  }
}
BENCHMARK(BM_BruteForceIsoCirculant);

void BM_CanonicalForm(benchmark::State& state) {
  const TemporalGraph g =
      gen::random_temporal(9, static_cast<int>(state.range(0)), 2, 0.5, {1, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(7);

void BM_DatasetGeneration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen::dyncsl_dataset(7));
  }
}
BENCHMARK(BM_DatasetGeneration);

void BM_ExperimentEndToEnd(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(harness::run_experiment_dyncsl(7));
  }
}
BENCHMARK(BM_ExperimentEndToEnd);

void BM_WeightedEncodeSweep(benchmark::State& state) {
  std::vector<double> theta(8);
  for (int t = 0; t < 8; ++t) theta[t] = static_cast<double>(1 << t);
  const agg::WeightParams params{theta};
  for (auto _ : state) {
    double acc = 0.0;
    for (unsigned mask = 0; mask < 256; ++mask) {
      std::vector<double> seq(8);
      for (int t = 0; t < 8; ++t) seq[t] = (mask >> t) & 1u;
      acc += agg::weighted_encode(seq, params);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_WeightedEncodeSweep);

}  // namespace

BENCHMARK_MAIN();
