#include <benchmark/benchmark.h>

#include "clsum/clcheck.hpp"
#include "clsum/delta.hpp"
#include "clsum/ehrhart.hpp"
#include "clsum/lattice.hpp"
#include "clsum/roots.hpp"
#include "clsum/table.hpp"

namespace {

using namespace clsum;

DeltaVector sweep_cell(int m) { return free_sum(delta_A_dual(m), delta_A_dual(m)); }

void BM_FromDelta(benchmark::State& state) {
  const DeltaVector d = sweep_cell(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(from_delta(d));
  state.SetLabel("degree " + std::to_string(d.dimension()));
}
BENCHMARK(BM_FromDelta)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_IsCL(benchmark::State& state) {
  const EhrhartPolynomial e = from_delta(sweep_cell(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_cl(e));
  state.SetLabel("degree " + std::to_string(e.dimension()));
}
BENCHMARK(BM_IsCL)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_SturmSequence(benchmark::State& state) {
  const auto q = symmetric_factorize(from_delta(sweep_cell(static_cast<int>(state.range(0))))).even_part;
  for (auto _ : state) benchmark::DoNotOptimize(SturmSequence(squarefree_part(q)));
}
BENCHMARK(BM_SturmSequence)->Arg(10)->Arg(20)->Arg(40);

void BM_IsolateRoots(benchmark::State& state) {
  const auto q = symmetric_factorize(from_delta(sweep_cell(static_cast<int>(state.range(0))))).even_part;
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(q));
}
BENCHMARK(BM_IsolateRoots)->Arg(5)->Arg(10)->Arg(20);

void BM_Table(benchmark::State& state) {
  TableSpec spec = state.range(0) == 1 ? table1_spec() : table2_spec();
  spec.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_table(spec));
}
BENCHMARK(BM_Table)->Args({1, 1})->Args({1, 0})->Args({2, 1})->Args({2, 0})->Unit(benchmark::kMillisecond);

void BM_LatticeCount(benchmark::State& state) {
  const HRep h = dualize(vertices_A(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(count(h, 3));
}
BENCHMARK(BM_LatticeCount)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
