#pragma once

#include <span>
#include <vector>

#include "tropic/algebra.hpp"

namespace tropic {

/// Finitely generated max-plus convex compactum:
///   hull(V) = { ⊕_i λ_i ⊙ v_i : λ_i ∈ [−∞, 0], max_i λ_i = 0 }.
/// Generators are nonempty and share one dimension; the represented set is
/// always compact and max-plus convex.
class TropicalPolytope {
 public:
  explicit TropicalPolytope(std::vector<Point> generators);
  TropicalPolytope(std::initializer_list<Point> generators)
      : TropicalPolytope(std::vector<Point>(generators)) {}

  std::size_t dim() const noexcept { return generators_.front().dim(); }
  const std::vector<Point>& generators() const noexcept { return generators_; }

 private:
  std::vector<Point> generators_;
};

struct MembershipWitness {
  bool is_member;
  std::vector<Rmax> lambdas;  // canonical coefficients, renormalized to max 0 on acceptance
  Point reconstruction;       // ⊕_i lambdas_i ⊙ v_i
};

/// Coordinatewise-greatest admissible coefficients whose combination is <= x:
/// λ_i = min(0, min_j(x_j − v_ij)). Always finite.
std::vector<Rmax> canonical_coeffs(const TropicalPolytope& P, const Point& x);

/// x lies in the hull iff the canonical reconstruction equals x (within tol)
/// and the canonical coefficients reach 0. Reconstruction alone would accept
/// the whole downward span below the hull.
MembershipWitness hull_member(const TropicalPolytope& P, const Point& x,
                              double tol = kDefaultTol);

/// Greedily drops generators that lie in the hull of the remaining ones.
/// The represented hull is unchanged; the result is canonical up to order.
TropicalPolytope reduce_generators(const TropicalPolytope& P, double tol = kDefaultTol);

/// {a ⊕ b : a ∈ P, b ∈ Q}; generated by the pairwise maxima of generators.
TropicalPolytope set_oplus(const TropicalPolytope& P, const TropicalPolytope& Q);

/// {t ⊙ a : a ∈ P} for finite t.
TropicalPolytope set_scale(Rmax t, const TropicalPolytope& P);

/// Cartesian product, generated by pairwise concatenations.
TropicalPolytope product(const TropicalPolytope& P, const TropicalPolytope& Q);

/// Image under the coordinate projection; coords are 0-based, strictly
/// increasing, nonempty. Projection commutes with ⊕ and ⊙, so the image of
/// the hull is the hull of the projected generators.
TropicalPolytope project(const TropicalPolytope& P, std::span<const std::size_t> coords);

/// ⊕ of all generators: the coordinatewise maximum of the hull, itself a member.
Point max_point(const TropicalPolytope& P);

/// Vertex sequence of the two-point hull { α⊙a ⊕ β⊙b : max(α,β) = 0 },
/// ordered from a to b. At most dim+1 vertices per branch.
std::vector<Point> tropical_segment(const Point& a, const Point& b);

/// ⊕_i alphas_i ⊙ P_i with the usual normalization; −∞ terms are dropped.
/// One element of the c-structure hull F({P_1,…,P_n}).
TropicalPolytope f_combination(std::span<const TropicalPolytope> polytopes,
                               std::span<const Rmax> alphas);

/// H(C, t) = C ⊕ (ln t) ⊙ A for t ∈ [0, 1], with ln 0 = −∞ dropping the
/// second term. Contracts an F-element C onto the family top A.
TropicalPolytope fset_homotopy(const TropicalPolytope& C, const TropicalPolytope& A,
                               double t);

/// H(A, t) = {a ⊕ (ln t) ⊙ max A : a ∈ A} for t ∈ [0, 1]; retracts A onto
/// the singleton {max A} as t goes to 1.
TropicalPolytope retraction_homotopy(const TropicalPolytope& A, double t);

bool hull_subset(const TropicalPolytope& P, const TropicalPolytope& Q,
                 double tol = kDefaultTol);  // P ⊆ Q
bool hull_equal(const TropicalPolytope& P, const TropicalPolytope& Q,
                double tol = kDefaultTol);

}  // namespace tropic
