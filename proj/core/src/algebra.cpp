#include "tropic/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace tropic {

Rmax::Rmax(double value) : value_(value) {
  if (std::isnan(value) || value == std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("Rmax: value must be finite or -inf");
  }
}

Rmax oplus(Rmax a, Rmax b) noexcept { return a < b ? b : a; }

Rmax odot(Rmax a, Rmax b) noexcept {
  // -inf + finite and -inf + -inf are both -inf in IEEE; +inf never occurs.
  if (!a.finite() || !b.finite()) return Rmax::neg_inf();
  return Rmax(a.value() + b.value());
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("Point: needs at least one coordinate");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw std::invalid_argument("Point: coordinates must be finite");
  }
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

Point oplus(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("oplus: dimension mismatch");
  std::vector<double> out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) out[j] = std::max(x[j], y[j]);
  return Point(std::move(out));
}

Point odot(Rmax lambda, const Point& x) {
  if (!lambda.finite()) {
    throw std::invalid_argument("odot: -inf coefficients are handled by dropping terms, not by shifting points");
  }
  std::vector<double> out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) out[j] = x[j] + lambda.value();
  return Point(std::move(out));
}

Point tropical_combination(std::span<const Point> points, std::span<const Rmax> lambdas) {
  if (points.size() != lambdas.size()) {
    throw std::invalid_argument("tropical_combination: points/lambdas length mismatch");
  }
  if (points.empty()) throw std::invalid_argument("tropical_combination: empty combination");

  Rmax top = Rmax::neg_inf();
  for (Rmax l : lambdas) top = oplus(top, l);
  if (!(top == Rmax(0.0))) {
    throw std::invalid_argument("tropical_combination: coefficients must satisfy max = 0, all <= 0");
  }
  for (Rmax l : lambdas) {
    if (l.finite() && l.value() > 0.0) {
      throw std::invalid_argument("tropical_combination: coefficients must satisfy max = 0, all <= 0");
    }
  }

  const std::size_t n = points.front().dim();
  std::vector<double> acc(n, kNegInf);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!lambdas[i].finite()) continue;  // dropped term
    if (points[i].dim() != n) {
      throw std::invalid_argument("tropical_combination: dimension mismatch");
    }
    const double l = lambdas[i].value();
    for (std::size_t j = 0; j < n; ++j) acc[j] = std::max(acc[j], points[i][j] + l);
  }
  return Point(std::move(acc));
}

double sup_diff(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("sup_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t j = 0; j < x.dim(); ++j) d = std::max(d, std::abs(x[j] - y[j]));
  return d;
}

bool approx_equal(const Point& x, const Point& y, double tol) {
  return x.dim() == y.dim() && sup_diff(x, y) <= tol;
}

}  // namespace tropic
