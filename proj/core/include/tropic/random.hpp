#pragma once

#include <cstdint>
#include <random>

#include "tropic/polytope.hpp"

namespace tropic {

/// Deterministic RNG: mt19937_64 with an explicit output mapping, so sampled
/// values are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one trial of a multi-trial run.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }  // [0,1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t uniform_index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

Point random_point(Rng& rng, std::size_t dim, double lo = -1.0, double hi = 1.0);

/// Generator count uniform in 1..max_generators, coordinates uniform in [lo, hi].
TropicalPolytope random_polytope(Rng& rng, std::size_t dim,
                                 std::size_t max_generators = 5,
                                 double lo = -1.0, double hi = 1.0);

/// Admissible coefficients: all in [−∞, 0], max exactly 0. One-hot vectors,
/// −∞-padded vectors and interior draws all occur with positive probability.
std::vector<Rmax> random_admissible_alphas(Rng& rng, std::size_t m);

Point random_hull_point(Rng& rng, const TropicalPolytope& P);

/// Multiplicative analogue: all in [0, 1], max exactly 1.
std::vector<double> random_admissible_mu(Rng& rng, std::size_t m);

}  // namespace tropic
