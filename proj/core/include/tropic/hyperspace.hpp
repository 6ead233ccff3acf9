#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropic/metrics.hpp"
#include "tropic/random.hpp"
#include "tropic/report.hpp"

namespace tropic {

/// Finite family {A_1,…,A_n} of equal-dimension hulls together with its
/// ⊕-top A = A_1 ⊕ … ⊕ A_n. The f_combinations of the family are exactly
/// the c-structure hull F({A_1,…,A_n}); every member is absorbed by the top.
struct CStructureFamily {
  explicit CStructureFamily(std::vector<TropicalPolytope> members_in);

  std::vector<TropicalPolytope> members;
  TropicalPolytope top;
};

/// Draws admissible alphas and returns the corresponding F-element.
TropicalPolytope sample_f_element(const CStructureFamily& family, Rng& rng);

/// Randomized check that the Hausdorff r-ball around `center` is an F-set:
/// for B, B' within r of the center and t <= 0, the combination B ⊕ t⊙B'
/// stays within max of the two distances (plus an n-ary folded variant).
/// Violations are excesses beyond margin 1e-9.
VerificationReport verify_ball_is_fset(const TropicalPolytope& center, double r,
                                       Metric m, int trials, std::uint64_t seed);

/// Same check against a fresh random center per trial (dims 2..4).
VerificationReport verify_ball_is_fset(double r, Metric m, int trials,
                                       std::uint64_t seed);

/// The hyperspace map induced by a coordinate projection: A ↦ p(A).
TropicalPolytope mpcc_project(const TropicalPolytope& P,
                              std::span<const std::size_t> coords);

/// Whether D lies in the fiber of the hyperspace projection over C, i.e.
/// projecting D onto the first dim(C) coordinates recovers C.
bool fiber_member(const TropicalPolytope& D, const TropicalPolytope& C,
                  double tol = kDefaultTol);

/// Section of the projection that appends a constant factor: A ↦ A × {c}.
TropicalPolytope selection_map(const TropicalPolytope& P, const Point& c);

struct PullbackReport {
  bool proj12_equal_B = false;
  bool proj13_equal_C = false;
  double hausdorff_D_D1 = 0.0;

  bool projections_equal() const noexcept { return proj12_equal_B && proj13_equal_C; }
};

/// The 3-coordinate scenario with two distinct hulls that project identically
/// onto both factors: D the full fiber product square, D1 its diagonal. Shows
/// the induced square of hyperspace projections admits no pullback property.
PullbackReport pullback_counterexample();

}  // namespace tropic
