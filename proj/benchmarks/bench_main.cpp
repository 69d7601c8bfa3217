#include <benchmark/benchmark.h>

#include "knotpack/anneal.hpp"
#include "knotpack/approx.hpp"
#include "knotpack/hull.hpp"
#include "knotpack/miniball.hpp"
#include "knotpack/probe.hpp"
#include "knotpack/size.hpp"
#include "knotpack/thickness.hpp"

using namespace knotpack;

namespace {

PolygonalCurve trefoil(int n) { return inscribed_polygon(ParamCurveSpec::torus(2, 3, 2, 1), n); }

void BM_Thickness(benchmark::State& state) {
    PolygonalCurve c = trefoil(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(thickness_value(c));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Thickness)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_ThicknessBreakdown(benchmark::State& state) {
    PolygonalCurve c = trefoil(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(polygonal_thickness(c).thickness);
}
BENCHMARK(BM_ThicknessBreakdown)->RangeMultiplier(2)->Range(32, 512);

void BM_SmallestEnclosingBall(benchmark::State& state) {
    PolygonalCurve c = inscribed_polygon(ParamCurveSpec::circle(1.0), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smallest_enclosing_ball(c.vertices).radius);
}
BENCHMARK(BM_SmallestEnclosingBall)->RangeMultiplier(4)->Range(64, 4096);

void BM_ConvexHullVolume(benchmark::State& state) {
    PolygonalCurve c = trefoil(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(convex_hull_volume(c.vertices));
}
BENCHMARK(BM_ConvexHullVolume)->RangeMultiplier(2)->Range(64, 1024);

void BM_PairwiseSpread(benchmark::State& state) {
    PolygonalCurve c = trefoil(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pairwise_spread_p(c, 3.0));
}
BENCHMARK(BM_PairwiseSpread)->RangeMultiplier(2)->Range(32, 256);

void BM_RadialSolver(benchmark::State& state) {
    PolygonalCurve c = trefoil(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(radial_size_p(c, 3.0).value);
}
BENCHMARK(BM_RadialSolver)->RangeMultiplier(2)->Range(32, 256);

void BM_Distortion(benchmark::State& state) {
    PolygonalCurve c = trefoil(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(distortion(c, 8).value);
}
BENCHMARK(BM_Distortion)->RangeMultiplier(2)->Range(32, 256);

void BM_TrunkSweep(benchmark::State& state) {
    PolygonalCurve c = trefoil(64);
    DirectionGrid grid = DirectionGrid::fibonacci(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(trunk_sweep(c, grid).max_v);
}
BENCHMARK(BM_TrunkSweep)->RangeMultiplier(4)->Range(64, 1024);

void BM_AnnealSteps(benchmark::State& state) {
    PolygonalCurve c = trefoil(64);
    for (auto _ : state) {
        AnnealConfig cfg;
        cfg.steps = state.range(0);
        cfg.seed = 7;
        cfg.step_sigma = 0.005;
        benchmark::DoNotOptimize(anneal(c, SizeFunctionalSpec::rmin(), cfg).best_value);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AnnealSteps)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
