#include "tropic/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace tropic {

namespace {

void check_same_dim(const TropicalPolytope& P, const TropicalPolytope& Q, const char* op) {
  if (P.dim() != Q.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
}

void check_unit_interval(double t, const char* op) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument(std::string(op) + ": t must lie in [0, 1]");
  }
}

}  // namespace

TropicalPolytope::TropicalPolytope(std::vector<Point> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw std::invalid_argument("TropicalPolytope: generator list must be nonempty");
  }
  const std::size_t n = generators_.front().dim();
  for (const Point& g : generators_) {
    if (g.dim() != n) throw std::invalid_argument("TropicalPolytope: mixed generator dimensions");
  }
}

std::vector<Rmax> canonical_coeffs(const TropicalPolytope& P, const Point& x) {
  if (x.dim() != P.dim()) throw std::invalid_argument("canonical_coeffs: dimension mismatch");
  std::vector<Rmax> lambdas;
  lambdas.reserve(P.generators().size());
  for (const Point& v : P.generators()) {
    double c = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) c = std::min(c, x[j] - v[j]);
    lambdas.push_back(Rmax(c));
  }
  return lambdas;
}

MembershipWitness hull_member(const TropicalPolytope& P, const Point& x, double tol) {
  std::vector<Rmax> lambdas = canonical_coeffs(P, x);
  double top = kNegInf;  // canonical coefficients are finite and <= 0
  for (Rmax l : lambdas) top = std::max(top, l.value());

  const std::size_t n = P.dim();
  const auto& gens = P.generators();
  std::vector<double> recon(n, kNegInf);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const double l = lambdas[i].value();
    for (std::size_t j = 0; j < n; ++j) recon[j] = std::max(recon[j], gens[i][j] + l);
  }

  Point recon_pt(std::move(recon));
  const bool member = top >= -tol && sup_diff(recon_pt, x) <= tol;
  if (member && top < 0.0) {
    // boundary slack case: shift up so the witness coefficients reach 0 exactly
    for (Rmax& l : lambdas) l = Rmax(l.value() - top);
    std::vector<double> c = recon_pt.coords();
    for (double& v : c) v -= top;
    recon_pt = Point(std::move(c));
  }
  return MembershipWitness{member, std::move(lambdas), std::move(recon_pt)};
}

TropicalPolytope reduce_generators(const TropicalPolytope& P, double tol) {
  std::vector<Point> kept = P.generators();
  std::size_t i = 0;
  while (kept.size() > 1 && i < kept.size()) {
    std::vector<Point> rest;
    rest.reserve(kept.size() - 1);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (k != i) rest.push_back(kept[k]);
    }
    if (hull_member(TropicalPolytope(rest), kept[i], tol).is_member) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return TropicalPolytope(std::move(kept));
}

TropicalPolytope set_oplus(const TropicalPolytope& P, const TropicalPolytope& Q) {
  check_same_dim(P, Q, "set_oplus");
  std::vector<Point> gens;
  gens.reserve(P.generators().size() * Q.generators().size());
  for (const Point& v : P.generators()) {
    for (const Point& w : Q.generators()) gens.push_back(oplus(v, w));
  }
  return reduce_generators(TropicalPolytope(std::move(gens)));
}

TropicalPolytope set_scale(Rmax t, const TropicalPolytope& P) {
  if (!t.finite()) throw std::invalid_argument("set_scale: t must be finite");
  std::vector<Point> gens;
  gens.reserve(P.generators().size());
  for (const Point& v : P.generators()) gens.push_back(odot(t, v));
  return TropicalPolytope(std::move(gens));
}

TropicalPolytope product(const TropicalPolytope& P, const TropicalPolytope& Q) {
  std::vector<Point> gens;
  gens.reserve(P.generators().size() * Q.generators().size());
  for (const Point& v : P.generators()) {
    for (const Point& w : Q.generators()) {
      std::vector<double> c = v.coords();
      c.insert(c.end(), w.coords().begin(), w.coords().end());
      gens.push_back(Point(std::move(c)));
    }
  }
  return reduce_generators(TropicalPolytope(std::move(gens)));
}

TropicalPolytope project(const TropicalPolytope& P, std::span<const std::size_t> coords) {
  if (coords.empty()) throw std::invalid_argument("project: coordinate subset must be nonempty");
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] >= P.dim()) throw std::invalid_argument("project: coordinate out of range");
    if (k > 0 && coords[k] <= coords[k - 1]) {
      throw std::invalid_argument("project: coordinates must be strictly increasing");
    }
  }
  std::vector<Point> gens;
  gens.reserve(P.generators().size());
  for (const Point& v : P.generators()) {
    std::vector<double> c;
    c.reserve(coords.size());
    for (std::size_t j : coords) c.push_back(v[j]);
    gens.push_back(Point(std::move(c)));
  }
  return reduce_generators(TropicalPolytope(std::move(gens)));
}

Point max_point(const TropicalPolytope& P) {
  Point top = P.generators().front();
  for (std::size_t i = 1; i < P.generators().size(); ++i) top = oplus(top, P.generators()[i]);
  return top;
}

namespace {

// Vertices of t ↦ from ⊕ t⊙to for t sweeping [-inf, 0]; starts at `from`,
// ends at from ⊕ to.
std::vector<Point> segment_branch(const Point& from, const Point& to) {
  std::set<double> ts;
  for (std::size_t j = 0; j < from.dim(); ++j) {
    const double t0 = from[j] - to[j];  // where coordinate j switches
    if (t0 < 0.0) ts.insert(t0);
  }
  ts.insert(0.0);
  std::vector<Point> out;
  out.push_back(from);
  for (double t : ts) {
    std::vector<double> c(from.dim());
    for (std::size_t j = 0; j < from.dim(); ++j) c[j] = std::max(from[j], to[j] + t);
    out.push_back(Point(std::move(c)));
  }
  return out;
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  // b on the straight segment a-c: direction vectors parallel with the same
  // orientation (coordinates move monotonically along a branch).
  const std::size_t n = a.dim();
  std::vector<double> u(n), w(n);
  for (std::size_t j = 0; j < n; ++j) {
    u[j] = b[j] - a[j];
    w[j] = c[j] - b[j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(u[i] * w[j] - u[j] * w[i]) > 1e-12) return false;
    }
  }
  double dot = 0.0;
  for (std::size_t j = 0; j < n; ++j) dot += u[j] * w[j];
  return dot >= 0.0;
}

}  // namespace

std::vector<Point> tropical_segment(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tropical_segment: dimension mismatch");
  if (a == b) return {a};

  std::vector<Point> forward = segment_branch(a, b);   // a … a⊕b
  std::vector<Point> backward = segment_branch(b, a);  // b … a⊕b

  std::vector<Point> polyline = std::move(forward);
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) polyline.push_back(*it);

  std::vector<Point> cleaned;
  for (Point& p : polyline) {
    if (!cleaned.empty() && cleaned.back() == p) continue;
    cleaned.push_back(std::move(p));
  }
  std::vector<Point> result;
  for (std::size_t k = 0; k < cleaned.size(); ++k) {
    if (k > 0 && k + 1 < cleaned.size() && collinear(result.back(), cleaned[k], cleaned[k + 1])) {
      continue;
    }
    result.push_back(cleaned[k]);
  }
  return result;
}

TropicalPolytope f_combination(std::span<const TropicalPolytope> polytopes,
                               std::span<const Rmax> alphas) {
  if (polytopes.size() != alphas.size()) {
    throw std::invalid_argument("f_combination: polytopes/alphas length mismatch");
  }
  if (polytopes.empty()) throw std::invalid_argument("f_combination: empty combination");
  const std::size_t n = polytopes.front().dim();
  for (const TropicalPolytope& P : polytopes) {
    if (P.dim() != n) throw std::invalid_argument("f_combination: dimension mismatch");
  }
  Rmax top = Rmax::neg_inf();
  for (Rmax a : alphas) {
    if (a.finite() && a.value() > 0.0) {
      throw std::invalid_argument("f_combination: coefficients must satisfy max = 0, all <= 0");
    }
    top = oplus(top, a);
  }
  if (!(top == Rmax(0.0))) {
    throw std::invalid_argument("f_combination: coefficients must satisfy max = 0, all <= 0");
  }

  bool seeded = false;
  TropicalPolytope folded = polytopes.front();  // placeholder until first finite term
  for (std::size_t i = 0; i < polytopes.size(); ++i) {
    if (!alphas[i].finite()) continue;  // dropped term
    TropicalPolytope scaled = set_scale(alphas[i], polytopes[i]);
    folded = seeded ? set_oplus(folded, scaled) : std::move(scaled);
    seeded = true;
  }
  return reduce_generators(folded);
}

TropicalPolytope fset_homotopy(const TropicalPolytope& C, const TropicalPolytope& A, double t) {
  check_same_dim(C, A, "fset_homotopy");
  check_unit_interval(t, "fset_homotopy");
  if (t == 0.0) return C;  // ln 0 = -inf drops the A term entirely
  return set_oplus(C, set_scale(Rmax(std::log(t)), A));
}

TropicalPolytope retraction_homotopy(const TropicalPolytope& A, double t) {
  check_unit_interval(t, "retraction_homotopy");
  if (t == 0.0) return A;
  const Point shifted_top = odot(Rmax(std::log(t)), max_point(A));
  std::vector<Point> gens;
  gens.reserve(A.generators().size());
  for (const Point& v : A.generators()) gens.push_back(oplus(v, shifted_top));
  return reduce_generators(TropicalPolytope(std::move(gens)));
}

bool hull_subset(const TropicalPolytope& P, const TropicalPolytope& Q, double tol) {
  if (P.dim() != Q.dim()) return false;
  for (const Point& v : P.generators()) {
    if (!hull_member(Q, v, tol).is_member) return false;
  }
  return true;
}

bool hull_equal(const TropicalPolytope& P, const TropicalPolytope& Q, double tol) {
  return hull_subset(P, Q, tol) && hull_subset(Q, P, tol);
}

}  // namespace tropic
