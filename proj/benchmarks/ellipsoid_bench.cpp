#include <benchmark/benchmark.h>

#include <numbers>

#include "ellipsoid/area.hpp"
#include "ellipsoid/curvature.hpp"
#include "ellipsoid/ellipsoid.hpp"
#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/quadrature.hpp"

namespace {

using namespace ellipsoid;

void BM_CarlsonRf(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(carlson_rf(x, 1.0, 2.0));
    x = x < 1.0 ? x + 1e-9 : 0.3;
  }
}
BENCHMARK(BM_CarlsonRf);

void BM_EllintF(benchmark::State& state) {
  double m = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ellint_f(1.0, m));
    m = m < 0.99 ? m + 1e-9 : 0.1;
  }
}
BENCHMARK(BM_EllintF);

void BM_SurfaceAreaTriaxial(benchmark::State& state) {
  const Ellipsoid e(3.0, 2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(surface_area(e));
}
BENCHMARK(BM_SurfaceAreaTriaxial);

void BM_SurfaceAreaDispatchSphere(benchmark::State& state) {
  const Ellipsoid e(2.0, 2.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(surface_area(e));
}
BENCHMARK(BM_SurfaceAreaDispatchSphere);

void BM_AreaOracle(benchmark::State& state) {
  const Ellipsoid e(3.0, 2.0, 1.0);
  const QuadratureSpec spec;
  for (auto _ : state)
    benchmark::DoNotOptimize(area_by_eq_s(e, spec).value);
}
BENCHMARK(BM_AreaOracle);

void BM_AreaOracleFlat(benchmark::State& state) {
  // Extreme axis ratio: the adaptive refinement has to chase the rim.
  const Ellipsoid e(1.0, 0.5, 0.001);
  const QuadratureSpec spec;
  for (auto _ : state)
    benchmark::DoNotOptimize(area_by_eq_s(e, spec).value);
}
BENCHMARK(BM_AreaOracleFlat);

void BM_PrincipalCurvatures(benchmark::State& state) {
  const Ellipsoid e(3.0, 2.0, 1.0);
  const SurfacePoint p{1.1, 0.8};
  for (auto _ : state)
    benchmark::DoNotOptimize(principal_curvatures(e, p).chi1);
}
BENCHMARK(BM_PrincipalCurvatures);

void BM_GaussBonnet(benchmark::State& state) {
  const Ellipsoid e(3.0, 2.0, 1.0);
  const QuadratureSpec spec;
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_bonnet_total(e, spec));
}
BENCHMARK(BM_GaussBonnet);

} // namespace

BENCHMARK_MAIN();
