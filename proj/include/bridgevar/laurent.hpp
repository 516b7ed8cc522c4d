#pragma once

// Laurent polynomials in lambda with coefficients in Z[r], and 2x2 matrices
// over them or over any commutative coefficient ring.

#include <string>
#include <vector>

#include "bridgevar/poly.hpp"

namespace bv {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// Constant term c (in r).
  explicit LaurentPoly(UniPoly c);
  LaurentPoly(int low_exp, std::vector<UniPoly> coeffs);

  /// c * lambda^e
  static LaurentPoly monomial(const UniPoly& c, int e);
  static LaurentPoly lambda(int e) { return monomial(UniPoly(mpz_class(1), Var::r), e); }

  bool is_zero() const { return coeffs_.empty(); }
  int low_exp() const { return low_; }
  int high_exp() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  /// Coefficient of lambda^e.
  UniPoly coeff(int e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.low_ == b.low_);
  }

  /// Specialize lambda to a rational value; the result is a polynomial in r.
  QPoly at_lambda(const mpq_class& lam) const;
  /// Specialize both lambda and r.
  mpq_class at(const mpq_class& lam, const mpq_class& r) const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<UniPoly> coeffs_;
};

std::string to_string(const LaurentPoly& p);

/// Thrown when a Laurent polynomial is not a polynomial in y = lambda^2 + lambda^-2.
class NotInTraceSubring : public std::domain_error {
 public:
  explicit NotInTraceSubring(const std::string& term)
      : std::domain_error("not in trace subring: offending term " + term) {}
};

/// Rewrite a Laurent polynomial in (r, y) with y = lambda^2 + lambda^-2;
/// the result has outer variable y and inner variable r.
BiPoly rewrite_in_y(const LaurentPoly& p);

template <class R>
struct Mat2 {
  R a, b, c, d;  // [[a, b], [c, d]]

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  R trace() const { return a + d; }
  R det() const { return a * d - b * c; }
  /// Inverse of a determinant-one matrix.
  Mat2 sl2_inverse() const { return {d, -b, -c, a}; }
};

using LaurentMat2 = Mat2<LaurentPoly>;
using QMat2 = Mat2<mpq_class>;
using QPolyMat2 = Mat2<QPoly>;

template <class R>
Mat2<R> identity(const R& one, const R& zero) {
  return {one, zero, zero, one};
}

/// A^e for e of either sign, by repeated squaring.
template <class R>
Mat2<R> mat_power(const Mat2<R>& m, long n, const R& one, const R& zero) {
  Mat2<R> base = n < 0 ? m.sl2_inverse() : m;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Mat2<R> out = identity(one, zero);
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

LaurentMat2 mat_power(const LaurentMat2& m, long n);

}  // namespace bv
