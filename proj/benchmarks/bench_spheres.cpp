#include <benchmark/benchmark.h>

#include "bregman/bregman.hpp"

using namespace bregman;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

void BM_LiftRoundtrip(benchmark::State& state) {
  const auto g = make_burg(3);
  const BregmanSphere s(g, vec({0.5, 1.0, 2.0}), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(hyperplane_to_sphere(g, lift_sphere(s)));
}
BENCHMARK(BM_LiftRoundtrip);

void BM_IntersectBurgSpheres(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  const auto g = make_burg(2);
  const Vector target = vec({0.8, 1.7});
  const std::vector<BregmanSphere> spheres{BregmanSphere(g, vec({1.0, 1.0}), bregman::bregman(g, target, vec({1.0, 1.0}))),
                                           BregmanSphere(g, vec({2.0, 0.5}), bregman::bregman(g, target, vec({2.0, 0.5})))};
  for (auto _ : state) benchmark::DoNotOptimize(intersect_right_spheres(g, spheres, grid));
}
BENCHMARK(BM_IntersectBurgSpheres)->Arg(64)->Arg(256)->Arg(1024);

void BM_AlphaSpheres(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) / 2.0;
  const bool simplex = state.range(1) != 0;
  const Vector x = simplex ? vec({0.3, 0.3, 0.4}) : vec({1.1, 0.9, 1.3});
  const Vector c1 = simplex ? vec({0.4, 0.35, 0.25}) : vec({1.4, 0.7, 1.0});
  const Vector c2 = simplex ? vec({0.25, 0.4, 0.35}) : vec({0.8, 1.2, 1.5});
  const Vector c3 = vec({1.0, 1.0, 0.9});
  std::vector<AlphaSphere> spheres{{c1, alpha_divergence(alpha, x, c1)}, {c2, alpha_divergence(alpha, x, c2)}};
  if (!simplex) spheres.push_back({c3, alpha_divergence(alpha, x, c3)});
  for (auto _ : state) benchmark::DoNotOptimize(alpha_sphere_intersection(alpha, spheres, simplex));
}
BENCHMARK(BM_AlphaSpheres)->Args({-2, 0})->Args({0, 0})->Args({1, 0})->Args({-2, 1})->Args({0, 1})->Args({1, 1});

}  // namespace

BENCHMARK_MAIN();
