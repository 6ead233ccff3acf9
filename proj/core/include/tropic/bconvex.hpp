#pragma once

#include <cstdint>
#include <vector>

#include "tropic/polytope.hpp"
#include "tropic/report.hpp"

namespace tropic {

/// B-convex compactum in the strictly positive orthant, generated as
///   { max_i(μ_i · v_i) : μ_i ∈ [0, 1], max_i μ_i = 1 }.
/// Closed under (x, y, t) ↦ max(t·x, y) for t ∈ [0, 1]; the multiplicative
/// sibling of a tropical polytope under coordinatewise ln/exp.
class BPolytope {
 public:
  explicit BPolytope(std::vector<Point> generators);  // all coordinates > 0
  BPolytope(std::initializer_list<Point> generators)
      : BPolytope(std::vector<Point>(generators)) {}

  std::size_t dim() const noexcept { return generators_.front().dim(); }
  const std::vector<Point>& generators() const noexcept { return generators_; }

 private:
  std::vector<Point> generators_;
};

/// μ_i = min(1, min_j(x_j / v_ij)): the greatest admissible multiplicative
/// coefficients with max_i(μ_i·v_i) <= x.
std::vector<double> b_canonical_coeffs(const BPolytope& P, const Point& x);

/// Membership by multiplicative residuation, mirroring hull_member:
/// reconstruction equals x within tol and max μ reaches 1.
bool b_member(const BPolytope& P, const Point& x, double tol = kDefaultTol);

TropicalPolytope log_bridge(const BPolytope& P);  // coordinatewise ln of generators
BPolytope exp_bridge(const TropicalPolytope& Q);  // coordinatewise exp; inverse of log_bridge

/// Samples x, y from the hull and t from [0, 1]; records a violation whenever
/// max(t·x, y) fails b_member.
VerificationReport b_convexity_check(const BPolytope& P, int trials, std::uint64_t seed);

/// Same check against a fresh random polytope per trial.
VerificationReport b_convexity_check(int trials, std::uint64_t seed);

}  // namespace tropic
