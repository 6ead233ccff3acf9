#include "support/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tropic/random.hpp"

namespace tropic::testing {

namespace {

// Coefficients live in [kFloor, 0]; at the coordinate scales used in tests
// a -30 shift is indistinguishable from a dropped term.
constexpr double kFloor = -30.0;

// splitmix64: the oracle burns ~7 draws per sample, so generator cost
// dominates; this keeps the 10^5-sample budget well inside the runtime cap.
struct MixRng {
  explicit MixRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool chance(double p) { return uniform() < p; }
  std::uint64_t state;
};

struct FlatHull {
  explicit FlatHull(const TropicalPolytope& P)
      : m(P.generators().size()), n(P.dim()), data(m * n) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) data[i * n + j] = P.generators()[i][j];
    }
  }
  double at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  std::size_t m, n;
  std::vector<double> data;
};

double eval_sup_dist(const FlatHull& hull, const std::vector<double>& lambda, const Point& x) {
  double dist = 0.0;
  for (std::size_t j = 0; j < hull.n; ++j) {
    double acc = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.m; ++i) {
      acc = std::max(acc, lambda[i] + hull.at(i, j));
    }
    dist = std::max(dist, std::abs(acc - x[j]));
  }
  return dist;
}

void normalize(std::vector<double>& lambda) {
  double top = lambda[0];
  for (double l : lambda) top = std::max(top, l);
  for (double& l : lambda) l = std::max(l - top, kFloor);
}

}  // namespace

double sampled_min_dist(const TropicalPolytope& P, const Point& x, int samples,
                        std::uint64_t seed) {
  const FlatHull hull(P);
  MixRng rng(seed);

  std::vector<double> lambda(hull.m), best_lambda(hull.m, 0.0);
  double best = eval_sup_dist(hull, best_lambda, x);

  // Ties re-anchor the search: plateau walks are what swap the normalization
  // pivot (the coefficient pinned at 0) without passing through worse states.
  auto try_lambda = [&]() {
    const double d = eval_sup_dist(hull, lambda, x);
    if (d <= best) {
      best = d;
      best_lambda = lambda;
    }
  };
  auto fresh_draw = [&]() {
    if (rng.chance(0.1)) {  // one-hot: a single surviving generator
      std::fill(lambda.begin(), lambda.end(), kFloor);
      lambda[rng.index(hull.m)] = 0.0;
    } else {
      for (double& l : lambda) l = -rng.uniform(0.0, 4.0);
      normalize(lambda);
    }
    try_lambda();
  };

  const int global = samples * 3 / 10;
  for (int s = 0; s < global; ++s) fresh_draw();

  // Refinement with no fixed schedule: log-uniform radii so every scale of
  // move stays available, mixing whole-vector jitters, single-coordinate
  // jitters, and single-coordinate reseats (which revive dropped terms).
  const double log_lo = std::log(1e-8), log_hi = std::log(2.0);
  for (int s = global; s < samples; ++s) {
    const double u = rng.uniform();
    if (u < 0.10) {
      fresh_draw();
      continue;
    }
    const double radius = std::exp(rng.uniform(log_lo, log_hi));
    lambda = best_lambda;
    if (u < 0.55) {
      for (double& l : lambda) l = std::min(0.0, l + rng.uniform(-radius, radius));
    } else if (u < 0.85) {
      const std::size_t i = rng.index(hull.m);
      lambda[i] = std::min(0.0, lambda[i] + rng.uniform(-radius, radius));
    } else {
      const std::size_t i = rng.index(hull.m);
      lambda[i] = rng.chance(0.2) ? 0.0 : -rng.uniform(0.0, 4.0);
    }
    normalize(lambda);
    try_lambda();
  }
  return best;
}

std::vector<Point> sampled_hull_points(const TropicalPolytope& P, int count,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) points.push_back(random_hull_point(rng, P));
  return points;
}

}  // namespace tropic::testing
