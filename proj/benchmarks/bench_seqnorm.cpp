#include <benchmark/benchmark.h>

#include "mskit/models.hpp"

using namespace mskit;

namespace {

CoefficientArray boundary_model(int n, int j_max) {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Boundary;
  spec.n = n;
  spec.j_max = j_max;
  return generate(spec);
}

NormParams params() {
  return NormParams{Scalar::ratio(4, 5), Scalar(1), Scalar(1), Scalar::ratio(-3, 2)};
}

}  // namespace

static void BM_SupFlavorBoundary(benchmark::State& state) {
  CoefficientArray a = boundary_model(2, int(state.range(0)));
  NormParams np = params();
  for (auto _ : state) {
    double v = norm_sup_flavor(a, np);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(a.size());
}
BENCHMARK(BM_SupFlavorBoundary)->DenseRange(8, 14, 2)->Complexity();

static void BM_SubFlavorBoundary(benchmark::State& state) {
  CoefficientArray a = boundary_model(2, int(state.range(0)));
  NormParams np = params();
  for (auto _ : state) {
    double v = norm_sub_flavor(a, np);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(a.size());
}
BENCHMARK(BM_SubFlavorBoundary)->DenseRange(8, 14, 2)->Complexity();

static void BM_DeltaSeries(benchmark::State& state) {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Delta;
  spec.n = 2;
  spec.j_max = int(state.range(0));
  CoefficientArray a = generate(spec);
  NormParams np{Scalar(-1), Scalar(2), Scalar(1), Scalar(-1)};
  for (auto _ : state) {
    LevelSeries s = sub_flavor_series(a, np);
    benchmark::DoNotOptimize(s.cumulative.back());
  }
}
BENCHMARK(BM_DeltaSeries)->Arg(16)->Arg(24);
