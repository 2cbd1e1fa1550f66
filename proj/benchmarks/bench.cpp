#include <benchmark/benchmark.h>

#include "m0n/arrangement.hpp"
#include "m0n/keel.hpp"
#include "m0n/stable_tree.hpp"
#include "m0n/strata.hpp"

using namespace m0n;

static void BM_EnumerateTrees(benchmark::State& state) {
  LabelSet S = LabelSet::integer_range(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto trees = enumerate_stable_trees(S);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(6)->Arg(7)->Arg(8);

static void BM_StrataPoset(benchmark::State& state) {
  LabelSet S = LabelSet::integer_range(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto poset = strata_poset(S);
    benchmark::DoNotOptimize(poset);
  }
}
BENCHMARK(BM_StrataPoset)->Arg(5)->Arg(6);

static void BM_CompactifiedCountPoly(benchmark::State& state) {
  LabelSet S = LabelSet::integer_range(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto poly = compactified_count_poly(S);
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_CompactifiedCountPoly)->Arg(6)->Arg(7);

static void BM_KeelDims(benchmark::State& state) {
  for (auto _ : state) {
    KeelRing ring(LabelSet::integer_range(1, static_cast<int>(state.range(0))));
    auto dims = ring.all_graded_dimensions();
    benchmark::DoNotOptimize(dims);
  }
}
BENCHMARK(BM_KeelDims)->Arg(5)->Arg(6);

static void BM_IntersectionPoset(benchmark::State& state) {
  Arrangement A = m0n_arrangement(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto poset = intersection_poset(A);
    benchmark::DoNotOptimize(poset);
  }
}
BENCHMARK(BM_IntersectionPoset)->Arg(6)->Arg(7)->Arg(8);

static void BM_ComplementCountFp(benchmark::State& state) {
  Arrangement A = ny_arrangement(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(complement_count_fp(A, 101));
  }
}
BENCHMARK(BM_ComplementCountFp)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
