#include "tropic/hyperspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tropic {

namespace {

TropicalPolytope fold_top(const std::vector<TropicalPolytope>& members) {
  if (members.empty()) {
    throw std::invalid_argument("CStructureFamily: needs at least one member");
  }
  TropicalPolytope acc = members.front();
  for (std::size_t i = 1; i < members.size(); ++i) acc = set_oplus(acc, members[i]);
  return acc;
}

double ball_scale(Metric m, std::size_t j) {
  return m == Metric::kSup ? 1.0 : std::ldexp(1.0, static_cast<int>(j) + 1);
}

// Jitter within pointwise metric distance <= 0.8*r: a per-coordinate bound
// of 0.8*r*scale_j suffices, and truncated weighted coordinates are free.
Point jitter_point(const Point& v, double r, Metric m, Rng& rng) {
  std::vector<double> c(v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const double h = std::min(0.8 * r * ball_scale(m, j), 2.0);
    c[j] = v[j] + rng.uniform(-h, h);
  }
  return Point(std::move(c));
}

// Random hull within Hausdorff distance < r of the center: jittered generator
// cloud with occasional drops/duplicates, rejection-checked, capped attempts.
TropicalPolytope sample_near(const TropicalPolytope& center, double r, Metric m, Rng& rng) {
  const auto& gens = center.generators();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point> cand;
    cand.reserve(gens.size() + 1);
    for (const Point& v : gens) {
      if (gens.size() > 1 && cand.size() + 1 < gens.size() && rng.chance(0.15)) continue;
      cand.push_back(jitter_point(v, r, m, rng));
    }
    if (cand.empty()) cand.push_back(jitter_point(gens.front(), r, m, rng));
    if (rng.chance(0.3)) {
      cand.push_back(jitter_point(gens[rng.uniform_index(gens.size())], r, m, rng));
    }
    TropicalPolytope sample{std::move(cand)};
    if (hausdorff(m, center, sample) < r) return sample;
  }
  // plain pointwise jitter is always within 0.8*r
  std::vector<Point> cand;
  cand.reserve(gens.size());
  for (const Point& v : gens) cand.push_back(jitter_point(v, r, m, rng));
  return TropicalPolytope(std::move(cand));
}

void run_fset_trial(const TropicalPolytope& center, double r, Metric m, Rng& rng,
                    VerificationReport& report) {
  auto check = [&](double lhs, double bound) {
    const double margin = lhs - bound;
    report.worst_margin = std::max(report.worst_margin, margin);
    if (margin > 1e-9) ++report.violations;
  };

  // binary form: B ⊕ t⊙B' stays within max of the two distances
  const TropicalPolytope B = sample_near(center, r, m, rng);
  const TropicalPolytope B2 = sample_near(center, r, m, rng);
  const double dB = hausdorff(m, center, B);
  const double dB2 = hausdorff(m, center, B2);
  const double t = rng.chance(0.1) ? 0.0 : -rng.uniform(0.0, 3.0);
  check(hausdorff(m, center, set_oplus(B, set_scale(Rmax(t), B2))), std::max(dB, dB2));

  // n-ary form, folded exactly as the induction step combines terms
  const std::size_t k = 2 + rng.uniform_index(3);
  std::vector<TropicalPolytope> parts;
  std::vector<double> dists;
  parts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    parts.push_back(sample_near(center, r, m, rng));
    dists.push_back(hausdorff(m, center, parts.back()));
  }
  const std::vector<Rmax> alphas = random_admissible_alphas(rng, k);
  double bound = kNegInf;
  for (std::size_t i = 0; i < k; ++i) {
    if (alphas[i].finite()) bound = std::max(bound, dists[i]);
  }
  check(hausdorff(m, center,
                  f_combination(std::span<const TropicalPolytope>(parts),
                                std::span<const Rmax>(alphas))),
        bound);
}

VerificationReport make_report(int trials, std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("verification: trials must be positive");
  VerificationReport report;
  report.trials = static_cast<std::uint64_t>(trials);
  report.worst_margin = kNegInf;  // overwritten by the first check
  report.seed = seed;
  return report;
}

}  // namespace

CStructureFamily::CStructureFamily(std::vector<TropicalPolytope> members_in)
    : members(std::move(members_in)), top(fold_top(members)) {}

TropicalPolytope sample_f_element(const CStructureFamily& family, Rng& rng) {
  const std::vector<Rmax> alphas = random_admissible_alphas(rng, family.members.size());
  return f_combination(std::span<const TropicalPolytope>(family.members),
                       std::span<const Rmax>(alphas));
}

VerificationReport verify_ball_is_fset(const TropicalPolytope& center, double r, Metric m,
                                       int trials, std::uint64_t seed) {
  if (!(r > 0.0)) throw std::invalid_argument("verify_ball_is_fset: r must be positive");
  VerificationReport report = make_report(trials, seed);
  for (std::uint64_t trial = 0; trial < report.trials; ++trial) {
    Rng rng = Rng::for_trial(seed, trial);
    run_fset_trial(center, r, m, rng, report);
  }
  return report;
}

VerificationReport verify_ball_is_fset(double r, Metric m, int trials, std::uint64_t seed) {
  if (!(r > 0.0)) throw std::invalid_argument("verify_ball_is_fset: r must be positive");
  VerificationReport report = make_report(trials, seed);
  for (std::uint64_t trial = 0; trial < report.trials; ++trial) {
    Rng rng = Rng::for_trial(seed, trial);
    const TropicalPolytope center = random_polytope(rng, 2 + rng.uniform_index(3));
    run_fset_trial(center, r, m, rng, report);
  }
  return report;
}

TropicalPolytope mpcc_project(const TropicalPolytope& P,
                              std::span<const std::size_t> coords) {
  return project(P, coords);
}

bool fiber_member(const TropicalPolytope& D, const TropicalPolytope& C, double tol) {
  if (C.dim() > D.dim()) {
    throw std::invalid_argument("fiber_member: base dimension exceeds product dimension");
  }
  std::vector<std::size_t> base(C.dim());
  std::iota(base.begin(), base.end(), std::size_t{0});
  return hausdorff(Metric::kSup, mpcc_project(D, base), C) <= tol;
}

TropicalPolytope selection_map(const TropicalPolytope& P, const Point& c) {
  return product(P, TropicalPolytope({c}));
}

PullbackReport pullback_counterexample() {
  // One retained coordinate per factor; all others are pinned to 0.
  const TropicalPolytope B({{0, 0}, {0, 1}});                          // = C
  const TropicalPolytope D({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}});  // fiber product
  const TropicalPolytope D1({{0, 0, 0}, {0, 1, 1}});                   // its diagonal

  const std::size_t pr12[] = {0, 1};
  const std::size_t pr13[] = {0, 2};
  constexpr double tol = 1e-12;

  PullbackReport report;
  report.proj12_equal_B = hull_equal(mpcc_project(D, pr12), B, tol) &&
                          hull_equal(mpcc_project(D1, pr12), B, tol);
  report.proj13_equal_C = hull_equal(mpcc_project(D, pr13), B, tol) &&
                          hull_equal(mpcc_project(D1, pr13), B, tol);
  report.hausdorff_D_D1 = hausdorff(Metric::kSup, D, D1);
  return report;
}

}  // namespace tropic
