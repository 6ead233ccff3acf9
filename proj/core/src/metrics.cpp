#include "tropic/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tropic {

namespace {

constexpr double kPosInf = std::numeric_limits<double>::infinity();

// Per-coordinate scale of the eps-ball: |x_j - y_j| <= eps * scale_j puts the
// pair within eps on coordinate j (until the weighted metric truncates).
double coord_scale(Metric m, std::size_t j) {
  return m == Metric::kSup ? 1.0 : std::ldexp(1.0, static_cast<int>(j) + 1);
}

struct Box {
  std::vector<double> lower, upper;
};

Box metric_ball(Metric m, const Point& x, double eps) {
  const std::size_t n = x.dim();
  Box box{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const double half = eps * coord_scale(m, j);
    if (m == Metric::kWeighted && half >= 1.0) {
      // the truncated coordinate cannot push the distance above eps
      box.lower[j] = -kPosInf;
      box.upper[j] = kPosInf;
    } else {
      box.lower[j] = x[j] - half;
      box.upper[j] = x[j] + half;
    }
  }
  return box;
}

bool hull_meets_box(const TropicalPolytope& P, const Box& box) {
  const auto& gens = P.generators();
  const std::size_t n = P.dim();
  // greatest admissible coefficients against the box's upper corner
  std::vector<double> c(gens.size());
  double top = kNegInf;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    double ci = 0.0;
    for (std::size_t j = 0; j < n; ++j) ci = std::min(ci, box.upper[j] - gens[i][j]);
    c[i] = ci;
    top = std::max(top, ci);
  }
  if (top < 0.0) return false;  // no hull point fits below the upper corner
  // z* = ⊕ c_i ⊙ v_i is the greatest hull element below the upper corner;
  // the hull meets the box iff z* clears the lower corner.
  for (std::size_t j = 0; j < n; ++j) {
    double zj = kNegInf;
    for (std::size_t i = 0; i < gens.size(); ++i) zj = std::max(zj, c[i] + gens[i][j]);
    if (zj < box.lower[j]) return false;
  }
  return true;
}

void check_dims(const Point& x, const TropicalPolytope& P, const char* op) {
  if (x.dim() != P.dim()) throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

double directed_impl(Metric m, const TropicalPolytope& P, const TropicalPolytope& Q) {
  double worst = 0.0;
  for (const Point& v : P.generators()) {
    worst = std::max(worst, dist_point_to_hull(m, v, Q, DistMode::kExact));
  }
  return worst;
}

}  // namespace

double point_dist(Metric m, const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("point_dist: dimension mismatch");
  double d = 0.0;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const double a = std::abs(x[j] - y[j]);
    d = std::max(d, m == Metric::kSup ? a : std::min(a, 1.0) * std::ldexp(1.0, -(static_cast<int>(j) + 1)));
  }
  return d;
}

double exp_metric(Rmax x, Rmax y) noexcept {
  return std::abs(std::exp(x.value()) - std::exp(y.value()));  // exp(-inf) = 0
}

bool eps_feasible(Metric m, const Point& x, const TropicalPolytope& P, double eps) {
  if (eps < 0.0) throw std::invalid_argument("eps_feasible: eps must be nonnegative");
  check_dims(x, P, "eps_feasible");
  return hull_meets_box(P, metric_ball(m, x, eps));
}

double dist_point_to_hull(Metric m, const Point& x, const TropicalPolytope& P,
                          DistMode mode, double tol) {
  check_dims(x, P, "dist_point_to_hull");
  const double reach = point_dist(m, x, max_point(P));  // feasible upper bound

  if (mode == DistMode::kBisect) {
    if (eps_feasible(m, x, P, 0.0)) return 0.0;
    double lo = 0.0, hi = reach + 1.0;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (eps_feasible(m, x, P, mid) ? hi : lo) = mid;
    }
    return hi;
  }

  // Exact mode: the feasibility boundary is piecewise linear in eps; its value
  // is one of the breakpoints where a coefficient clamp releases, a box side
  // meets a generator, two box sides trade the active constraint, or a
  // weighted coordinate truncates. Enumerate them all and take the smallest
  // feasible one.
  const auto& gens = P.generators();
  const std::size_t n = P.dim();
  std::vector<double> cands;
  cands.reserve(2 + gens.size() * n * (n + 1));
  cands.push_back(0.0);
  cands.push_back(reach);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double sj = coord_scale(m, j);
      cands.push_back((gens[i][j] - x[j]) / sj);
      cands.push_back((x[j] - gens[i][j]) / sj);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        cands.push_back((x[j] - x[k] + gens[i][k] - gens[i][j]) / (sj + coord_scale(m, k)));
      }
    }
  }
  if (m == Metric::kWeighted) {
    for (std::size_t j = 0; j < n; ++j) cands.push_back(1.0 / coord_scale(m, j));
  }
  std::sort(cands.begin(), cands.end());
  for (double c : cands) {
    if (c < 0.0) continue;
    // nudge past ties so boundary-exact candidates test as feasible
    if (eps_feasible(m, x, P, c + 1e-12 * (1.0 + c))) return c;
  }
  return reach;  // unreachable: reach itself is always feasible
}

double directed_hausdorff(Metric m, const TropicalPolytope& P, const TropicalPolytope& Q) {
  if (P.dim() != Q.dim()) throw std::invalid_argument("directed_hausdorff: dimension mismatch");
  return directed_impl(m, reduce_generators(P), Q);
}

double hausdorff(Metric m, const TropicalPolytope& P, const TropicalPolytope& Q) {
  if (P.dim() != Q.dim()) throw std::invalid_argument("hausdorff: dimension mismatch");
  const TropicalPolytope Pr = reduce_generators(P);
  const TropicalPolytope Qr = reduce_generators(Q);
  return std::max(directed_impl(m, Pr, Qr), directed_impl(m, Qr, Pr));
}

}  // namespace tropic
