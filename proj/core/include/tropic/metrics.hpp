#pragma once

#include "tropic/polytope.hpp"

namespace tropic {

/// Ambient point metrics.
///   kSup:      max_j |x_j − y_j|
///   kWeighted: max_j min(|x_j − y_j|, 1) / 2^j with 1-based j; values in [0, 1/2].
/// Both are translation-invariant (⊙ by finite t is an isometry) and
/// ⊕-nonexpansive coordinatewise.
enum class Metric { kSup, kWeighted };

double point_dist(Metric m, const Point& x, const Point& y);

/// |e^x − e^y| on R ∪ {−∞}, with e^{−∞} = 0. Scalar-coefficient metric only;
/// hull points never carry −∞ entries.
double exp_metric(Rmax x, Rmax y) noexcept;

/// Whether the hull meets the closed eps-ball around x. Under both metrics
/// the ball is a coordinate box; the test forms the greatest hull element
/// below the box's upper corner and compares against the lower corner, so it
/// is exact.
bool eps_feasible(Metric m, const Point& x, const TropicalPolytope& P, double eps);

enum class DistMode {
  kExact,   // minimize over the breakpoints of the feasibility boundary
  kBisect,  // binary search eps_feasible to tolerance
};

double dist_point_to_hull(Metric m, const Point& x, const TropicalPolytope& P,
                          DistMode mode = DistMode::kExact, double tol = 1e-10);

/// sup_{a ∈ P} dist(a, Q); attained at a generator of P since the distance to
/// a max-plus convex set is quasi-convex under ⊕ and ⊙.
double directed_hausdorff(Metric m, const TropicalPolytope& P, const TropicalPolytope& Q);

double hausdorff(Metric m, const TropicalPolytope& P, const TropicalPolytope& Q);

}  // namespace tropic
