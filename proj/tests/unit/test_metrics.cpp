#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support/oracle.hpp"
#include "tropic/metrics.hpp"
#include "tropic/random.hpp"

using namespace tropic;
using tropic::testing::sampled_hull_points;

TEST_CASE("point_dist: sup and truncated weighted metrics") {
  CHECK(point_dist(Metric::kWeighted, Point{0, 0}, Point{5, 0}) == 0.5);
  CHECK(point_dist(Metric::kWeighted, Point{0, 0}, Point{0, 5}) == 0.25);
  CHECK(point_dist(Metric::kWeighted, Point{0, 0.5}, Point{0, 0.7}) == doctest::Approx(0.05));
  CHECK(point_dist(Metric::kSup, Point{1, 0}, Point{0, 0}) == 1.0);
  CHECK(point_dist(Metric::kSup, Point{1, 2}, Point{1, 2}) == 0.0);
  CHECK(point_dist(Metric::kWeighted, Point{1, 2}, Point{1, 2}) == 0.0);
  CHECK_THROWS_AS(point_dist(Metric::kSup, Point{0}, Point{0, 1}), std::invalid_argument);

  Rng rng(41);
  for (int it = 0; it < 100; ++it) {
    const Point x = random_point(rng, 4, -50, 50);
    const Point y = random_point(rng, 4, -50, 50);
    const double d = point_dist(Metric::kWeighted, x, y);
    CHECK(d >= 0.0);
    CHECK(d <= 0.5);
    CHECK(point_dist(Metric::kWeighted, y, x) == d);
  }
}

TEST_CASE("exp_metric on scalars") {
  CHECK(exp_metric(Rmax::neg_inf(), Rmax(0.0)) == 1.0);
  CHECK(exp_metric(Rmax::neg_inf(), Rmax::neg_inf()) == 0.0);
  CHECK(exp_metric(Rmax(std::log(2.0)), Rmax(0.0)) == doctest::Approx(1.0));
  CHECK(exp_metric(Rmax(1.0), Rmax(2.0)) == exp_metric(Rmax(2.0), Rmax(1.0)));
}

TEST_CASE("eps_feasible: exact ball-hull intersection") {
  const TropicalPolytope diag({{0, 0}, {1, 1}});
  CHECK(eps_feasible(Metric::kSup, Point{1, 0}, diag, 0.5));
  CHECK_FALSE(eps_feasible(Metric::kSup, Point{1, 0}, diag, 0.4));
  CHECK(eps_feasible(Metric::kSup, Point{0, 0}, diag, 0.0));
  CHECK(eps_feasible(Metric::kWeighted, Point{1, 0}, diag, 0.5));  // coordinate 1 truncates
  CHECK_THROWS_AS(eps_feasible(Metric::kSup, Point{0, 0}, diag, -0.1), std::invalid_argument);
}

TEST_CASE("dist_point_to_hull on worked examples") {
  const TropicalPolytope diag({{0, 0}, {1, 1}});
  CHECK(dist_point_to_hull(Metric::kSup, Point{1, 0}, diag) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dist_point_to_hull(Metric::kSup, Point{0.25, 0.25}, diag) == 0.0);
  CHECK(dist_point_to_hull(Metric::kSup, Point{2, 2}, TropicalPolytope({{0, 0}})) ==
        doctest::Approx(2.0));

  // grid-search oracle over the diagonal segment
  double grid_best = 1e9;
  for (int s = 0; s <= 10000; ++s) {
    const double u = s / 10000.0;
    grid_best = std::min(grid_best, std::max(std::abs(1 - u), std::abs(0 - u)));
  }
  CHECK(grid_best == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("exact and bisect modes agree") {
  Rng rng(42);
  for (int it = 0; it < 300; ++it) {
    const std::size_t dim = 2 + it % 3;
    const TropicalPolytope P = random_polytope(rng, dim);
    const Point x = rng.chance(0.3) ? random_hull_point(rng, P)
                                    : random_point(rng, dim, -1.8, 1.8);
    const Metric m = (it % 2 == 0) ? Metric::kSup : Metric::kWeighted;
    const double exact = dist_point_to_hull(m, x, P, DistMode::kExact);
    const double bisect = dist_point_to_hull(m, x, P, DistMode::kBisect);
    CHECK(std::abs(exact - bisect) <= 1e-8);
  }
}

TEST_CASE("weighted distance saturates at 1/2 for far points") {
  const TropicalPolytope P({{0, 0}, {1, 1}});
  CHECK(dist_point_to_hull(Metric::kWeighted, Point{40, 0}, P) == doctest::Approx(0.5));
  CHECK(point_dist(Metric::kWeighted, Point{40, 0}, Point{0, 0}) == 0.5);
}

TEST_CASE("directed_hausdorff: worked examples and generator attainment") {
  const TropicalPolytope square({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const TropicalPolytope diag({{0, 0}, {1, 1}});
  CHECK(directed_hausdorff(Metric::kSup, square, diag) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(directed_hausdorff(Metric::kSup, diag, square) == 0.0);
  CHECK(hausdorff(Metric::kSup, square, diag) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hausdorff(Metric::kSup, diag, diag) == 0.0);
  CHECK(hausdorff(Metric::kSup, TropicalPolytope({{0, 0}}), TropicalPolytope({{1, 1}})) == 1.0);

  Rng rng(43);
  for (int it = 0; it < 10; ++it) {
    const TropicalPolytope P = random_polytope(rng, 3);
    const TropicalPolytope Q = random_polytope(rng, 3);
    const Metric m = (it % 2 == 0) ? Metric::kSup : Metric::kWeighted;
    const double directed = directed_hausdorff(m, P, Q);
    double sampled = 0.0;
    for (const Point& p : sampled_hull_points(P, 2000, 900 + it)) {
      sampled = std::max(sampled, dist_point_to_hull(m, p, Q));
    }
    CHECK(sampled <= directed + 1e-12);
    CHECK(directed <= sampled + 1e-6);
  }
}

TEST_CASE("hausdorff satisfies the metric axioms on random hulls") {
  Rng rng(44);
  for (int it = 0; it < 100; ++it) {
    const std::size_t dim = 2 + it % 3;
    const Metric m = (it % 2 == 0) ? Metric::kSup : Metric::kWeighted;
    const TropicalPolytope A = random_polytope(rng, dim);
    const TropicalPolytope B = random_polytope(rng, dim);
    const TropicalPolytope C = random_polytope(rng, dim);
    const double ab = hausdorff(m, A, B);
    CHECK(hausdorff(m, B, A) == ab);  // symmetric by construction
    CHECK(ab <= hausdorff(m, A, C) + hausdorff(m, C, B) + 1e-9);

    // identity of indiscernibles: padding with members keeps distance 0
    std::vector<Point> padded = A.generators();
    padded.push_back(random_hull_point(rng, A));
    CHECK(hausdorff(m, A, TropicalPolytope(padded)) == 0.0);
    if (ab > kDefaultTol) CHECK_FALSE(hull_equal(A, B));
  }
}

TEST_CASE("finite shifts are isometries of the Hausdorff metric") {
  Rng rng(45);
  for (int it = 0; it < 100; ++it) {
    const TropicalPolytope P = random_polytope(rng, 3);
    const TropicalPolytope Q = random_polytope(rng, 3);
    const Rmax t(rng.uniform(-2.0, 2.0));
    const Metric m = (it % 2 == 0) ? Metric::kSup : Metric::kWeighted;
    CHECK(std::abs(hausdorff(m, set_scale(t, P), set_scale(t, Q)) - hausdorff(m, P, Q)) <= 1e-9);
  }
}

TEST_CASE("set_oplus is nonexpansive for the Hausdorff metric") {
  Rng rng(46);
  for (int it = 0; it < 500; ++it) {
    const std::size_t dim = 2 + it % 3;
    const Metric m = (it % 2 == 0) ? Metric::kSup : Metric::kWeighted;
    const TropicalPolytope A = random_polytope(rng, dim);
    const TropicalPolytope A2 = random_polytope(rng, dim);
    const TropicalPolytope B = random_polytope(rng, dim);
    const TropicalPolytope B2 = random_polytope(rng, dim);
    const double lhs = hausdorff(m, set_oplus(A, B), set_oplus(A2, B2));
    const double rhs = std::max(hausdorff(m, A, A2), hausdorff(m, B, B2));
    CHECK(lhs <= rhs + 1e-9);
  }
}
