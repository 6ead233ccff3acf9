#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tropic/bconvex.hpp"
#include "tropic/random.hpp"

using namespace tropic;

namespace {

BPolytope random_b_hull(Rng& rng, std::size_t dim) {
  const std::size_t count = 1 + rng.uniform_index(4);
  std::vector<Point> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(dim);
    for (double& v : c) v = std::exp(rng.uniform(-1.0, 1.0));
    gens.push_back(Point(std::move(c)));
  }
  return BPolytope(std::move(gens));
}

Point b_point(Rng& rng, const BPolytope& P) {
  const std::vector<double> mu = random_admissible_mu(rng, P.generators().size());
  std::vector<double> c(P.dim(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      c[j] = std::max(c[j], mu[i] * P.generators()[i][j]);
    }
  }
  return Point(std::move(c));
}

}  // namespace

TEST_CASE("BPolytope requires strictly positive generators") {
  CHECK_THROWS_AS(BPolytope({{1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(BPolytope({{1.0, -2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(BPolytope(std::vector<Point>{}), std::invalid_argument);
  CHECK(BPolytope({{0.5, 3.0}}).dim() == 2);
}

TEST_CASE("b_member: multiplicative residuation") {
  const BPolytope P({{1, 1}, {2, 2}});
  CHECK(b_member(P, Point{1.5, 1.5}));
  const std::vector<double> mu = b_canonical_coeffs(P, Point{1.5, 1.5});
  CHECK(mu[0] == 1.0);
  CHECK(mu[1] == 0.75);

  CHECK(b_member(P, Point{2, 2}));  // a generator

  const BPolytope single({{1, 1}});
  CHECK_FALSE(b_member(single, Point{0.5, 0.5}));  // max mu = 0.5 < 1

  CHECK_THROWS_AS(b_member(P, Point{1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("log_bridge and exp_bridge are mutually inverse") {
  const double e = std::exp(1.0);
  const BPolytope P({{1, 1}, {e, e}});
  CHECK(hull_equal(log_bridge(P), TropicalPolytope({{0, 0}, {1, 1}}), 1e-12));

  Rng rng(61);
  for (int it = 0; it < 50; ++it) {
    const BPolytope Q = random_b_hull(rng, 2 + it % 3);
    const BPolytope back = exp_bridge(log_bridge(Q));
    REQUIRE(back.generators().size() == Q.generators().size());
    for (std::size_t i = 0; i < Q.generators().size(); ++i) {
      CHECK(approx_equal(back.generators()[i], Q.generators()[i], 1e-12));
    }
  }
}

TEST_CASE("membership agrees across the bridge") {
  Rng rng(62);
  for (int it = 0; it < 50; ++it) {
    const std::size_t dim = 2 + it % 3;
    const BPolytope P = random_b_hull(rng, dim);
    const TropicalPolytope L = log_bridge(P);
    for (int s = 0; s < 20; ++s) {
      Point x = rng.chance(0.5) ? b_point(rng, P) : random_point(rng, dim, 0.2, 3.0);
      std::vector<double> logs(dim);
      for (std::size_t j = 0; j < dim; ++j) logs[j] = std::log(x[j]);
      CHECK(b_member(P, x) == hull_member(L, Point(logs)).is_member);
    }
  }
  // the worked instance follows the bridge too
  const BPolytope P({{1, 1}, {2, 2}});
  const Point x{1.5, 1.5};
  CHECK(b_member(P, x) ==
        hull_member(log_bridge(P), Point{std::log(1.5), std::log(1.5)}).is_member);
}

TEST_CASE("b-hulls are closed under max(t·x, y)") {
  const BPolytope P({{1, 2}, {3, 1}});

  // endpoints of the parameter range
  const Point x = Point{1, 2};
  std::vector<double> z(2);
  for (std::size_t j = 0; j < 2; ++j) z[j] = std::max(1.0 * x[j], x[j]);
  CHECK(b_member(P, Point(z)));                       // t = 1, y = x
  CHECK(b_member(P, Point{3, 1}));                    // t = 0 leaves y

  const VerificationReport fixed = b_convexity_check(P, 200, 5);
  CHECK(fixed.violations == 0);

  const VerificationReport roaming = b_convexity_check(200, 5);
  CHECK(roaming.violations == 0);
  CHECK(roaming.trials == 200);

  CHECK_THROWS_AS(b_convexity_check(P, 0, 5), std::invalid_argument);
}

TEST_CASE("b_member is covariant under uniform positive scaling") {
  Rng rng(63);
  for (int it = 0; it < 50; ++it) {
    const std::size_t dim = 2 + it % 3;
    const BPolytope P = random_b_hull(rng, dim);
    const double s = std::exp(rng.uniform(-1.0, 1.0));
    std::vector<Point> scaled_gens;
    for (const Point& g : P.generators()) {
      std::vector<double> c(dim);
      for (std::size_t j = 0; j < dim; ++j) c[j] = s * g[j];
      scaled_gens.push_back(Point(std::move(c)));
    }
    const BPolytope Ps(scaled_gens);
    const Point x = rng.chance(0.5) ? b_point(rng, P) : random_point(rng, dim, 0.2, 3.0);
    std::vector<double> sx(dim);
    for (std::size_t j = 0; j < dim; ++j) sx[j] = s * x[j];
    CHECK(b_member(P, x, 1e-7) == b_member(Ps, Point(sx), 1e-7));
  }
}
