#include <benchmark/benchmark.h>

#include "tropic/hyperspace.hpp"
#include "tropic/metrics.hpp"
#include "tropic/polytope.hpp"
#include "tropic/random.hpp"

namespace {

using namespace tropic;

TropicalPolytope make_polytope(std::size_t dim, std::size_t gens, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> out;
  out.reserve(gens);
  for (std::size_t i = 0; i < gens; ++i) out.push_back(random_point(rng, dim));
  return TropicalPolytope(std::move(out));
}

void BM_HullMember(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const TropicalPolytope P = make_polytope(dim, 6, 1);
  Rng rng(2);
  const Point x = random_point(rng, dim, -1.5, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull_member(P, x).is_member);
  }
}
BENCHMARK(BM_HullMember)->Arg(2)->Arg(4)->Arg(8);

void BM_ReduceGenerators(benchmark::State& state) {
  const auto gens = static_cast<std::size_t>(state.range(0));
  const TropicalPolytope P = make_polytope(4, gens, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_generators(P).generators().size());
  }
}
BENCHMARK(BM_ReduceGenerators)->Arg(4)->Arg(16)->Arg(64);

void BM_SetOplus(benchmark::State& state) {
  const TropicalPolytope P = make_polytope(4, 6, 4);
  const TropicalPolytope Q = make_polytope(4, 6, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(set_oplus(P, Q).generators().size());
  }
}
BENCHMARK(BM_SetOplus);

void BM_DistExact(benchmark::State& state) {
  const Metric m = state.range(0) == 0 ? Metric::kSup : Metric::kWeighted;
  const TropicalPolytope P = make_polytope(4, 6, 6);
  Rng rng(7);
  const Point x = random_point(rng, 4, -1.5, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist_point_to_hull(m, x, P, DistMode::kExact));
  }
}
BENCHMARK(BM_DistExact)->Arg(0)->Arg(1);

void BM_DistBisect(benchmark::State& state) {
  const Metric m = state.range(0) == 0 ? Metric::kSup : Metric::kWeighted;
  const TropicalPolytope P = make_polytope(4, 6, 6);
  Rng rng(7);
  const Point x = random_point(rng, 4, -1.5, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist_point_to_hull(m, x, P, DistMode::kBisect));
  }
}
BENCHMARK(BM_DistBisect)->Arg(0)->Arg(1);

void BM_Hausdorff(benchmark::State& state) {
  const auto gens = static_cast<std::size_t>(state.range(0));
  const TropicalPolytope P = make_polytope(3, gens, 8);
  const TropicalPolytope Q = make_polytope(3, gens, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hausdorff(Metric::kSup, P, Q));
  }
}
BENCHMARK(BM_Hausdorff)->Arg(4)->Arg(16);

void BM_FsetBallTrial(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_ball_is_fset(0.5, Metric::kSup, 1, seed++).violations);
  }
}
BENCHMARK(BM_FsetBallTrial);

}  // namespace

BENCHMARK_MAIN();
