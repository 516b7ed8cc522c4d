#pragma once

#include <optional>
#include <vector>

#include "bridgevar/poly.hpp"

namespace bv {

/// Primitive gcd over Q with positive leading coefficient; gcd(0,0) = 0.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

/// Resultant with respect to the polynomial variable.  Constant-constant
/// pairs give 1; two zero inputs throw std::domain_error("undefined resultant").
mpz_class resultant(const UniPoly& f, const UniPoly& g);
UniPoly resultant(const BiPoly& f, const BiPoly& g);

/// Resultant of bivariate polynomials with respect to either variable.
UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate);

UniPoly squarefree_part(const UniPoly& f);
bool is_separable(const UniPoly& f);

/// Discriminant-free separability witness: gcd(f, f').
UniPoly derivative_gcd(const UniPoly& f);

// ---------------------------------------------------------------------------
// Bivariate helpers.  A BiPoly stores coefficients in the inner variable
// indexed by powers of the outer one.

/// Variable of the coefficients (r when every coefficient is zero).
Var inner_var(const BiPoly& f);

/// Exchange the roles of the two variables.
BiPoly swap_vars(const BiPoly& f);

/// Degree in the inner variable (maximum over the coefficients).
int inner_degree(const BiPoly& f);

/// Partial derivative in the inner variable.
BiPoly inner_derivative(const BiPoly& f);

/// Substitute a rational value for the outer variable.
QPoly eval_outer(const BiPoly& f, const mpq_class& v);

/// Substitute a rational value for the inner variable.
QPoly eval_inner(const BiPoly& f, const mpq_class& v);

/// Value at a rational point (inner, outer).
mpq_class eval_point(const BiPoly& f, const mpq_class& inner, const mpq_class& outer);

/// Substitute a polynomial in the inner variable for the outer variable.
UniPoly substitute_outer(const BiPoly& f, const UniPoly& value);

/// p(q) for a univariate p and bivariate q.
BiPoly substitute(const UniPoly& p, const BiPoly& q);

/// Integer content over both variables.
mpz_class content(const BiPoly& f);

/// Divide by content and make the leading coefficient (highest outer power,
/// then highest inner power) positive.
BiPoly normalize_unit(const BiPoly& f);

/// Lift a univariate polynomial to a constant in the outer variable.
BiPoly lift_inner(const UniPoly& p, Var outer);

/// View a univariate polynomial as one in the outer variable with constant coefficients.
BiPoly lift_outer(const UniPoly& p, Var inner);

/// Equality up to a nonzero constant factor.
bool equal_up_to_unit(const BiPoly& a, const BiPoly& b);
bool equal_up_to_unit(const UniPoly& a, const UniPoly& b);

// ---------------------------------------------------------------------------

/// Quotient of two integer polynomials with the common factor removed.
class RatPoly {
 public:
  RatPoly(UniPoly num, UniPoly den);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }

  /// Value at a rational point; std::nullopt where the denominator vanishes.
  std::optional<mpq_class> eval(const mpq_class& x) const;

 private:
  UniPoly num_;
  UniPoly den_;
};

}  // namespace bv
