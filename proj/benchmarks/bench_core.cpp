#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dfw/fractional.hpp"
#include "dfw/green.hpp"
#include "dfw/series.hpp"
#include "dfw/specfun.hpp"

namespace {

using namespace dfw;

void BM_BesselK(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) / 2;
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel(specfun::BesselKind::K, nu, x).value);
    x = x > 50 ? 0.05 : x * 1.07;
  }
}
BENCHMARK(BM_BesselK)->Arg(0)->Arg(1)->Arg(5)->Arg(40);

void BM_BesselJ(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) / 2;
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel(specfun::BesselKind::J, nu, x).value);
    x = x > 500 ? 0.05 : x * 1.07;
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(1)->Arg(5)->Arg(40);

std::vector<Point> scattered(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Point{u(rng), u(rng)});
  return out;
}

KernelSpec poisson() {
  KernelSpec spec;
  spec.family = Family::POISSON;
  spec.n = 2;
  spec.scale = 0.3;
  return spec;
}

void BM_Assemble(benchmark::State& state) {
  const auto pts = scattered(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble(pts, pts, {poisson()}));
}
BENCHMARK(BM_Assemble)->Arg(100)->Arg(400);

void BM_Fit(benchmark::State& state) {
  const auto pts = scattered(static_cast<std::size_t>(state.range(0)));
  PointCloud cloud;
  cloud.points = pts;
  for (const auto& p : pts) cloud.values.push_back(std::sin(3 * p[0]) * std::cos(2 * p[1]));
  for (auto _ : state) benchmark::DoNotOptimize(fit(cloud, pts, {poisson()}, 1e-10));
}
BENCHMARK(BM_Fit)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_SolveDirichlet(benchmark::State& state) {
  const BoundaryMesh mesh = discretize_circle(0, 0, 1, static_cast<std::size_t>(state.range(0)));
  std::vector<double> g;
  for (const auto& e : mesh.elements) g.push_back(e.midpoint[0] * e.midpoint[0] - e.midpoint[1] * e.midpoint[1]);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dirichlet(mesh, g));
}
BENCHMARK(BM_SolveDirichlet)->Arg(32)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_FractionalPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const GridOperator op = build_discrete_laplacian(2, n, 1.0 / (n + 1));
    benchmark::DoNotOptimize(matrix_fractional_power(op, 0.8));
  }
}
BENCHMARK(BM_FractionalPower)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
