#include <benchmark/benchmark.h>

#include <numbers>

#include "torihedra/angle_structure.hpp"
#include "torihedra/catalog.hpp"
#include "torihedra/circle_pattern.hpp"
#include "torihedra/cuts.hpp"
#include "torihedra/lobachevsky.hpp"
#include "torihedra/triangulation.hpp"

using namespace torihedra;

static void BM_Lobachevsky(benchmark::State& state) {
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lobachevsky(theta));
    theta += 1e-3;
    if (theta > std::numbers::pi) theta = 0.1;
  }
}
BENCHMARK(BM_Lobachevsky);

static void BM_MaximizeVolume(benchmark::State& state, const char* name) {
  const IdealTriangulation t = three_two_moves(stellate(catalog_link(name)));
  for (auto _ : state) benchmark::DoNotOptimize(maximize_volume(t).volume);
}
BENCHMARK_CAPTURE(BM_MaximizeVolume, triaxial, "triaxial");
BENCHMARK_CAPTURE(BM_MaximizeVolume, rhombitrihexagonal, "3.4.6.4");
BENCHMARK_CAPTURE(BM_MaximizeVolume, family_3, "Lj:3");

static void BM_SolveRadii(benchmark::State& state, const char* name) {
  const TorusDiagram d = catalog_link(name);
  for (auto _ : state) benchmark::DoNotOptimize(solve_radii(d).residual);
}
BENCHMARK_CAPTURE(BM_SolveRadii, triaxial, "triaxial");
BENCHMARK_CAPTURE(BM_SolveRadii, family_3, "Lj:3");

static void BM_DiskCuts(benchmark::State& state) {
  const TorusDiagram d = catalog_link("3.4.6.4");
  const int window = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_disk_cuts(d, 4, window).size());
}
BENCHMARK(BM_DiskCuts)->Arg(2)->Arg(3)->Arg(4);

static void BM_VolumeBounds(benchmark::State& state) {
  const TorusDiagram d = catalog_link("3.4.4.6");
  for (auto _ : state) benchmark::DoNotOptimize(volume_bounds(d).vol_perp);
}
BENCHMARK(BM_VolumeBounds);

BENCHMARK_MAIN();
