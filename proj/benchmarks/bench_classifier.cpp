#include <benchmark/benchmark.h>

#include "mskit/models.hpp"

using namespace mskit;

static void BM_ClassifierSweep(benchmark::State& state) {
  SpaceDescriptor proto;
  proto.family = Family::B;
  proto.flavor = Flavor::Sup;
  proto.q = Scalar(1);
  proto.rho = Scalar::ratio(-3, 2);
  proto.n = 3;
  int res = int(state.range(0));
  for (auto _ : state) {
    RegionGrid grid = grid_sweep(PredicateKind::EmbedLinfty, proto, 0.05, 3.0, -2.0, 3.0, res);
    benchmark::DoNotOptimize(grid.cells.data());
  }
  state.SetItemsProcessed(state.iterations() * res * res);
}
BENCHMARK(BM_ClassifierSweep)->Arg(32)->Arg(96);

static void BM_EmbeddingVerdict(benchmark::State& state) {
  SpaceDescriptor a, b;
  a.family = b.family = Family::B;
  a.flavor = b.flavor = Flavor::Sub;
  a.s = Scalar(2);
  b.s = Scalar::ratio(1, 2);
  a.p = Scalar(1);
  b.p = Scalar(2);
  a.q = Scalar(1);
  b.q = Scalar(2);
  a.rho = b.rho = Scalar(-1);
  a.n = b.n = 2;
  for (auto _ : state) {
    Verdict v = embeds({a, Target::space_of(b)});
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(BM_EmbeddingVerdict);

BENCHMARK_MAIN();
