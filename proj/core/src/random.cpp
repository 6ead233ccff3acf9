#include "tropic/random.hpp"

namespace tropic {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(seed) ^ (trial + 1)));
}

Point random_point(Rng& rng, std::size_t dim, double lo, double hi) {
  std::vector<double> c(dim);
  for (double& v : c) v = rng.uniform(lo, hi);
  return Point(std::move(c));
}

TropicalPolytope random_polytope(Rng& rng, std::size_t dim, std::size_t max_generators,
                                 double lo, double hi) {
  const std::size_t count = 1 + rng.uniform_index(max_generators);
  std::vector<Point> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_point(rng, dim, lo, hi));
  return TropicalPolytope(std::move(gens));
}

std::vector<Rmax> random_admissible_alphas(Rng& rng, std::size_t m) {
  std::vector<Rmax> alphas(m, Rmax::neg_inf());
  if (rng.chance(0.15)) {  // one-hot: a single generator survives
    alphas[rng.uniform_index(m)] = Rmax(0.0);
    return alphas;
  }
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < m; ++i) {
    if (rng.chance(0.25)) continue;  // dropped term
    alphas[i] = Rmax(-rng.uniform(0.0, 2.0));
    finite.push_back(i);
  }
  const std::size_t pivot =
      finite.empty() ? rng.uniform_index(m) : finite[rng.uniform_index(finite.size())];
  alphas[pivot] = Rmax(0.0);
  return alphas;
}

Point random_hull_point(Rng& rng, const TropicalPolytope& P) {
  const std::vector<Rmax> alphas = random_admissible_alphas(rng, P.generators().size());
  return tropical_combination(std::span<const Point>(P.generators()),
                              std::span<const Rmax>(alphas));
}

std::vector<double> random_admissible_mu(Rng& rng, std::size_t m) {
  std::vector<double> mu(m, 0.0);
  if (rng.chance(0.15)) {
    mu[rng.uniform_index(m)] = 1.0;
    return mu;
  }
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < m; ++i) {
    if (rng.chance(0.25)) continue;  // coefficient 0 contributes nothing positive
    mu[i] = rng.uniform();
    live.push_back(i);
  }
  const std::size_t pivot =
      live.empty() ? rng.uniform_index(m) : live[rng.uniform_index(live.size())];
  mu[pivot] = 1.0;
  return mu;
}

}  // namespace tropic
