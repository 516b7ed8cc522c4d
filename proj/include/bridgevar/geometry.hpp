#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bridgevar/models.hpp"
#include "bridgevar/poly.hpp"

namespace bv {

/// Points (r0, t0) with P(r0) = 0 and G(r0, t0) = 0, where G is a polynomial
/// in t with coefficients reduced modulo P.
struct SingularBranch {
  UniPoly P;
  std::vector<QPoly> G;  // G[i] is the coefficient of t^i
  std::vector<Point> rational_points;
  std::string describe() const;
};

struct AffineLocus {
  bool empty = true;
  std::vector<SingularBranch> branches;
  // method trace
  int res_t_ft_degree = kNegInfDegree;
  int res_t_fr_degree = kNegInfDegree;
  int gcd_degree = kNegInfDegree;
};

/// Singular points of F = 0 in the affine (r, t) plane, by elimination.
/// Throws std::domain_error("non-reduced input") when F has a repeated factor.
AffineLocus affine_singular_locus(const BiPoly& F);

struct InfinityReport {
  bool transversal = true;
  int points_on_r_infinity = 0;  // distinct points on the line r = oo
  int points_on_t_infinity = 0;
  bool corner_on_curve = false;  // (oo, oo)
  Bidegree bidegree;
  std::vector<std::string> witnesses;
};

/// Smoothness and transversality along the two lines at infinity of P1 x P1.
InfinityReport infinity_transversality(const BiPoly& F);

struct SmoothnessCertificate {
  long k = 0, l = 0;
  ModelKind target = ModelKind::D;
  bool refused = false;
  std::string refusal;
  AffineLocus affine;
  InfinityReport infinity;
  /// Candidates all satisfy Delta_k(r) = Delta_l(t) = 0 (always true when there are none).
  bool delta_filter_consistent = true;
  /// For k = l: singular points of the union D0 + D1 (its intersection points).
  std::optional<AffineLocus> union_locus;
  int union_intersections = 0;
  bool smooth() const { return !refused && affine.empty && infinity.transversal; }
};

SmoothnessCertificate smoothness_certificate(long k, long l);

struct ComponentCount {
  int count = 0;
  bool degenerate = false;
  std::string description;
  bool cross_checked = false;
};

ComponentCount component_count(long k, long l);

struct GenusY {
  int genus_bidegree = 0;
  int genus_formula = 0;
  bool hyperelliptic = false;
  // k = l only
  std::optional<int> d0_genus, d1_genus_bidegree, d1_genus_formula;
  std::optional<bool> d1_hyperelliptic;
};

/// Requires a passing smoothness certificate; throws std::logic_error otherwise.
GenusY genus_Y(long k, long l, const SmoothnessCertificate& cert);

enum class Component { Whole, D0, D1 };

struct OddPointCount {
  int formula = 0;
  int oracle = 0;
  int case_constant = 0;
  /// The odd-k case m < 0 < n, which the closed form covers only through its n > 0 clause.
  bool uncovered_case = false;
  bool agree() const { return formula == oracle; }
};

OddPointCount odd_point_count(long k, long l, Component which = Component::Whole);

struct GenusX {
  int genus_rh = 0;
  int genus_formula = 0;
  int odd_points = 0;
  std::optional<int> x0_rh, x0_formula, x1_rh, x1_formula;
};

GenusX genus_X(long k, long l, const SmoothnessCertificate& cert);

/// Closed-form values used by the reports.
int genus_Y_formula(long k, long l);
int genus_X_formula(long k, long l);
int odd_point_formula(long k, long l, int* case_constant = nullptr, bool* uncovered = nullptr);

}  // namespace bv
