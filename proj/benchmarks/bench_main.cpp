#include "proxgeo/covering.hpp"
#include "proxgeo/gallery.hpp"
#include "proxgeo/regularity.hpp"
#include "proxgeo/sphere_conditions.hpp"

#include <benchmark/benchmark.h>

using namespace proxgeo;

namespace {

Point at(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

void BM_ProjectExample1(benchmark::State& state) {
  const auto s = make_gallery_set("example1");
  const Point p = at(0.3, 2.5);
  for (auto _ : state) benchmark::DoNotOptimize(s->project(p));
}
BENCHMARK(BM_ProjectExample1);

void BM_ProjectComplementOfBalls(benchmark::State& state) {
  const auto s = make_gallery_set("complement_of_balls");
  const Point p = at(0.1, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(s->project(p));
}
BENCHMARK(BM_ProjectComplementOfBalls);

void BM_CheckConditionExample2(benchmark::State& state) {
  const auto s = make_gallery_set("example2");
  const Window w = Window::cube(2, -3, 3);
  const CheckOptions opt{static_cast<std::size_t>(state.range(0)), 16, 0};
  for (auto _ : state) benchmark::DoNotOptimize(check_condition(*s, Condition::Exterior, 0.1, w, opt));
}
BENCHMARK(BM_CheckConditionExample2)->Arg(500)->Arg(2000);

void BM_CoverPointDisk(benchmark::State& state) {
  const auto s = make_gallery_set("disk");
  const Point x = at(1.1, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(cover_point(*s, x, 1.0));
}
BENCHMARK(BM_CoverPointDisk);

void BM_RSDistance(benchmark::State& state) {
  const auto s = make_gallery_set("example2");
  const Window w = Window::cube(2, -3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(r_S_distance(*s, w));
}
BENCHMARK(BM_RSDistance);

} // namespace

BENCHMARK_MAIN();
