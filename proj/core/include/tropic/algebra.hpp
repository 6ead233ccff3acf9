#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace tropic {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Default absolute tolerance for approximate point/hull comparisons. The
// max/plus core is exact on dyadic inputs; ln/exp paths (homotopy parameters,
// the exp metric) round in the last bits.
inline constexpr double kDefaultTol = 1e-9;

/// Scalar of the max-plus semiring R ∪ {−∞}: ⊕ is max, ⊙ is +.
/// Finite or −∞; +∞ and NaN are rejected at construction.
class Rmax {
 public:
  Rmax(double value);  // implicit on purpose: coefficients read naturally
  static Rmax neg_inf() noexcept { return Rmax(kNegInf, Unchecked{}); }

  double value() const noexcept { return value_; }
  bool finite() const noexcept { return value_ != kNegInf; }

  friend bool operator==(Rmax a, Rmax b) noexcept = default;
  friend auto operator<=>(Rmax a, Rmax b) noexcept = default;

 private:
  struct Unchecked {};
  Rmax(double value, Unchecked) noexcept : value_(value) {}
  double value_;
};

Rmax oplus(Rmax a, Rmax b) noexcept;  // max(a, b)
Rmax odot(Rmax a, Rmax b) noexcept;   // a + b, with −∞ absorbing

/// Point of a finite-dimensional truncation R^n, n >= 1. Coordinates are
/// always finite; only combination coefficients may be −∞.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  std::vector<double> coords_;
};

Point oplus(const Point& x, const Point& y);  // coordinatewise max
Point odot(Rmax lambda, const Point& x);      // shift every coordinate; lambda must be finite

/// ⊕_i lambda_i ⊙ points_i with the normalization lambda_i <= 0,
/// max_i lambda_i = 0. Terms with lambda_i = −∞ are dropped.
Point tropical_combination(std::span<const Point> points, std::span<const Rmax> lambdas);

double sup_diff(const Point& x, const Point& y);  // max_j |x_j − y_j|
bool approx_equal(const Point& x, const Point& y, double tol = kDefaultTol);

}  // namespace tropic
