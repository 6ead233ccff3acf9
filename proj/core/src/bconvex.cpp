#include "tropic/bconvex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tropic/random.hpp"

namespace tropic {

namespace {

void check_positive(const Point& x, const char* op) {
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (!(x[j] > 0.0)) {
      throw std::invalid_argument(std::string(op) + ": coordinates must be strictly positive");
    }
  }
}

Point b_combination(const BPolytope& P, const std::vector<double>& mu) {
  const auto& gens = P.generators();
  std::vector<double> c(P.dim(), 0.0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = std::max(c[j], mu[i] * gens[i][j]);
  }
  return Point(std::move(c));
}

void run_b_trial(const BPolytope& P, Rng& rng, VerificationReport& report) {
  const std::size_t m = P.generators().size();
  const Point x = b_combination(P, random_admissible_mu(rng, m));
  const Point y = b_combination(P, random_admissible_mu(rng, m));
  const double t = rng.uniform();
  std::vector<double> z(P.dim());
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = std::max(t * x[j], y[j]);
  if (!b_member(P, Point(std::move(z)), kDefaultTol)) ++report.violations;
}

BPolytope random_b_polytope(Rng& rng, std::size_t dim, std::size_t max_generators = 5) {
  const std::size_t count = 1 + rng.uniform_index(max_generators);
  std::vector<Point> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(dim);
    for (double& v : c) v = std::exp(rng.uniform(-1.0, 1.0));
    gens.push_back(Point(std::move(c)));
  }
  return BPolytope(std::move(gens));
}

}  // namespace

BPolytope::BPolytope(std::vector<Point> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw std::invalid_argument("BPolytope: generator list must be nonempty");
  }
  const std::size_t n = generators_.front().dim();
  for (const Point& g : generators_) {
    if (g.dim() != n) throw std::invalid_argument("BPolytope: mixed generator dimensions");
    check_positive(g, "BPolytope");
  }
}

std::vector<double> b_canonical_coeffs(const BPolytope& P, const Point& x) {
  if (x.dim() != P.dim()) throw std::invalid_argument("b_canonical_coeffs: dimension mismatch");
  check_positive(x, "b_canonical_coeffs");
  std::vector<double> mu;
  mu.reserve(P.generators().size());
  for (const Point& v : P.generators()) {
    double m = 1.0;
    for (std::size_t j = 0; j < x.dim(); ++j) m = std::min(m, x[j] / v[j]);
    mu.push_back(m);
  }
  return mu;
}

bool b_member(const BPolytope& P, const Point& x, double tol) {
  const std::vector<double> mu = b_canonical_coeffs(P, x);
  const double top = *std::max_element(mu.begin(), mu.end());
  const Point recon = b_combination(P, mu);
  return top >= 1.0 - tol && sup_diff(recon, x) <= tol;
}

TropicalPolytope log_bridge(const BPolytope& P) {
  std::vector<Point> gens;
  gens.reserve(P.generators().size());
  for (const Point& v : P.generators()) {
    std::vector<double> c(v.dim());
    for (std::size_t j = 0; j < v.dim(); ++j) c[j] = std::log(v[j]);
    gens.push_back(Point(std::move(c)));
  }
  return TropicalPolytope(std::move(gens));
}

BPolytope exp_bridge(const TropicalPolytope& Q) {
  std::vector<Point> gens;
  gens.reserve(Q.generators().size());
  for (const Point& v : Q.generators()) {
    std::vector<double> c(v.dim());
    for (std::size_t j = 0; j < v.dim(); ++j) c[j] = std::exp(v[j]);
    gens.push_back(Point(std::move(c)));
  }
  return BPolytope(std::move(gens));
}

VerificationReport b_convexity_check(const BPolytope& P, int trials, std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("b_convexity_check: trials must be positive");
  VerificationReport report;
  report.trials = static_cast<std::uint64_t>(trials);
  report.seed = seed;
  for (std::uint64_t trial = 0; trial < report.trials; ++trial) {
    Rng rng = Rng::for_trial(seed, trial);
    run_b_trial(P, rng, report);
  }
  return report;
}

VerificationReport b_convexity_check(int trials, std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("b_convexity_check: trials must be positive");
  VerificationReport report;
  report.trials = static_cast<std::uint64_t>(trials);
  report.seed = seed;
  for (std::uint64_t trial = 0; trial < report.trials; ++trial) {
    Rng rng = Rng::for_trial(seed, trial);
    const BPolytope P = random_b_polytope(rng, 2 + rng.uniform_index(3));
    run_b_trial(P, rng, report);
  }
  return report;
}

}  // namespace tropic
