#include <benchmark/benchmark.h>

#include "dihom/enumeration.hpp"
#include "dihom/homometry.hpp"

namespace {

void BM_RightIv(benchmark::State& state) {
  const dihom::DihedralSet s = dihom::DihedralSet::parse(12, "0-,1+,3+,4-,8-");
  for (auto _ : state) {
    auto v = dihom::right_iv(s);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_RightIv);

void BM_HomometricByParts(benchmark::State& state) {
  const dihom::DihedralSet a = dihom::DihedralSet::parse(12, "0-,1+,3+,4-,8-");
  const dihom::DihedralSet b = dihom::DihedralSet::parse(12, "0-,3+,4-,5+,8-");
  for (auto _ : state) {
    bool ok = dihom::right_homometric_by_parts(a, b);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_HomometricByParts);

void BM_Canonicalize(benchmark::State& state) {
  const dihom::DihedralSet s = dihom::DihedralSet::parse(12, "0+,1-,3+,7-,8-");
  for (auto _ : state) {
    auto orbit = dihom::canonicalize(s, dihom::Side::right);
    benchmark::DoNotOptimize(orbit);
  }
}
BENCHMARK(BM_Canonicalize);

void BM_CensusDn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int cardinality = static_cast<int>(state.range(1));
  const int jobs = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto census = dihom::enumerate_dn(n, cardinality, dihom::Side::right, jobs);
    benchmark::DoNotOptimize(census);
  }
  state.SetItemsProcessed(state.iterations() * dihom::binomial(2 * n, cardinality));
}
BENCHMARK(BM_CensusDn)
    ->Args({12, 6, 1})
    ->Args({12, 7, 1})
    ->Args({16, 6, 1})
    ->Args({18, 7, 1})
    ->Args({18, 7, 4})
    ->Unit(benchmark::kMillisecond);

void BM_CensusZn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int cardinality = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto census = dihom::enumerate_zn(n, cardinality);
    benchmark::DoNotOptimize(census);
  }
}
BENCHMARK(BM_CensusZn)->Args({12, 6})->Args({16, 6})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
