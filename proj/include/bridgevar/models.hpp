#pragma once

// Plane models of the character varieties of J(k,l):
//   C(k,l) in (r,y):  f_n(t)(Phi_{-k}(r)Phi_{k-1}(r)(y-r) - 1) + f_{n-1}(t),  l = 2n,
//                     t = Phi_{-k}(r)Psi_k(r)(y-r) + 2,
//   X(k,l) in (r,x):  C(k,l) with y = x^2 - 2,
//   D(k,l) in (r,t):  Phi_{k+1}(r)Phi_{l-1}(t) - Phi_{k-1}(r)Phi_{l+1}(t).

#include <optional>
#include <string>
#include <utility>

#include "bridgevar/poly.hpp"

namespace bv {

enum class ModelKind { C, X, D, D0, D1 };
enum class ModelState { Curve, Empty, FullPlane, LineUnion };

std::string to_string(ModelKind k);
std::string to_string(ModelState s);

struct Bidegree {
  int r = 0;  // degree in the first (inner) variable
  int t = 0;  // degree in the second (outer) variable
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

struct CurveModel {
  ModelKind kind = ModelKind::C;
  ModelState state = ModelState::Curve;
  long k = 0, l = 0;
  /// Outer variable is the second coordinate (y, x or t), inner is r.
  BiPoly equation;
  Var first = Var::r, second = Var::y;
  Bidegree bidegree;
};

/// Primitive, sign-normalized, coefficient variables retagged.
BiPoly normalized_equation(const BiPoly& f, Var outer, Var inner);

Bidegree bidegree_of(const BiPoly& f);

/// The expected bidegree of D(k, 2n); std::nullopt for the full-plane case.
std::optional<Bidegree> expected_d_bidegree(long k, long l);

CurveModel c_model(long k, long l);
CurveModel x_model(long k, long l);
CurveModel d_model(long k, long l);

struct DSplit {
  CurveModel d0, d1;
};
DSplit d_split(long l);

struct Point {
  mpq_class first, second;
  friend bool operator==(const Point&, const Point&) = default;
};

/// (r, y) -> (r, Phi_{-k}(r)Psi_k(r)(y - r) + 2)
Point sigma_push(long k, long l, const Point& ry);
/// (r, t) -> (r, r + (t - 2)/(Phi_{-k}(r)Psi_k(r))); throws on the indeterminate locus.
Point sigma_pull(long k, long l, const Point& rt);

class IndeterminateLocus : public std::domain_error {
 public:
  IndeterminateLocus() : std::domain_error("indeterminate locus") {}
};

struct SpecialPointsReport {
  bool pass = true;
  /// The point of C(k,l) over Psi_k(r) = 0, present only for even k.
  std::optional<Point> c_point;
  bool d_roots_consistent = true;
  std::string detail;
};

SpecialPointsReport special_points_check(long k, long l);

}  // namespace bv
