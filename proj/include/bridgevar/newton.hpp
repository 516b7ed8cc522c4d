#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bridgevar/poly.hpp"

namespace bv {

/// A valuation value: an exact rational or +infinity (the valuation of 0).
struct ValueOrInf {
  bool infinite = false;
  mpq_class value;

  static ValueOrInf inf() { return {true, 0}; }
  static ValueOrInf of(mpq_class v) {
    v.canonicalize();
    return {false, v};
  }

  friend bool operator==(const ValueOrInf& a, const ValueOrInf& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const ValueOrInf& a, const ValueOrInf& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend ValueOrInf operator+(const ValueOrInf& a, const ValueOrInf& b) {
    if (a.infinite || b.infinite) return inf();
    return of(a.value + b.value);
  }
};

std::string to_string(const ValueOrInf& v);

/// Multiplicity of p in n (n != 0).
long vp(const mpz_class& n, const mpz_class& p);

/// v_p(numerator) - v_p(denominator); infinite for 0.  Throws when p is not prime.
ValueOrInf val_rat(const mpq_class& x, const mpz_class& p);

enum class QuadRing { GaussInt, RootThree };

/// a + b w with w^2 = -1 (GaussInt) or w^2 = 3 (RootThree).
struct QuadElem {
  mpz_class a, b;
  QuadRing ring = QuadRing::GaussInt;

  static QuadElem of(long a, long b, QuadRing ring) { return {mpz_class(a), mpz_class(b), ring}; }
  mpz_class disc() const { return ring == QuadRing::GaussInt ? -1 : 3; }
  mpz_class norm() const { return a * a - disc() * b * b; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y) { return {x.a + y.a, x.b + y.b, x.ring}; }
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y) { return {x.a - y.a, x.b - y.b, x.ring}; }
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    return {x.a * y.a + x.disc() * x.b * y.b, x.a * y.b + x.b * y.a, x.ring};
  }
  friend QuadElem operator*(const mpz_class& c, const QuadElem& x) { return {c * x.a, c * x.b, x.ring}; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.a == y.a && x.b == y.b && x.ring == y.ring; }
};

std::string to_string(const QuadElem& x);

/// The valuation above 3 normalized by v(3) = 1, i.e. v_3(norm)/2.  Only p = 3 is supported.
ValueOrInf val_quad(const QuadElem& x, QuadRing ring, const mpz_class& p = 3);

struct PolyPoint {
  int index = 0;
  ValueOrInf value;
  friend bool operator==(const PolyPoint&, const PolyPoint&) = default;
};

struct NewtonPolygon {
  std::vector<PolyPoint> points;
  /// Lower hull vertices; (0, inf) heads the list when the constant term vanishes.
  std::vector<PolyPoint> vertices;
  /// Slopes of the finite segments, strictly increasing.
  std::vector<mpq_class> slopes;
  /// Number of zero roots (length of the vertical segment).
  int vertical_length = 0;
};

struct RootValuation {
  ValueOrInf valuation;
  int count = 0;
};

/// Lower convex hull of the points (i, values[i]); throws when every value is infinite.
NewtonPolygon polygon(const std::vector<ValueOrInf>& values);

/// Multiset of root valuations, from negated slopes and horizontal lengths.
std::vector<RootValuation> root_valuations(const NewtonPolygon& np);

/// Newton polygon of an integer polynomial at p.
NewtonPolygon polygon_at(const UniPoly& f, const mpz_class& p);

enum class ShiftBase { One, I, Alpha };

struct ShiftedPolygon {
  ShiftBase variant = ShiftBase::One;
  long n = 0;
  long p = 0;
  int e = 0;
  std::vector<ValueOrInf> values;
  NewtonPolygon polygon;
  std::vector<PolyPoint> expected_vertices;
  bool matches() const { return polygon.vertices == expected_vertices; }
};

/// (S + a)^{4n} + 2n((S + a)^{2n+1} - (S + a)^{2n-1}) - 1 with a = 1 (One, over Z at p),
/// a = i (I, n a multiple of 3) or a = -2 + sqrt(3) (Alpha, n a multiple of 3).
ShiftedPolygon shifted_polygon(ShiftBase variant, long n, long p = 3);

/// Coefficients of the shifted polynomial over Z[w]; exposed for tests.
std::vector<QuadElem> shifted_coefficients(const QuadElem& alpha, long n);

struct BinomCheck {
  bool pass = true;
  int e = 0;
  long checked = 0;
  std::vector<long> skipped_j;   // p^j > n, where the binomial vanishes
  std::vector<long> integral_j;  // e < j: only v_p(C(n,k)) >= 0 > e - j is checked
  std::string detail;
};

/// v_p(C(n, p^j)) = e - j and v_p(C(n, k)) > e - j for 0 < k < p^j, for j <= e = v_p(n).
/// For j > e the bound is implied by integrality and the equality is not claimed (C(10, 4) = 210).
BinomCheck binom_check(long n, long p, long j_min, long j_max);

struct ComplexAbsEntry {
  long n = 0;
  int roots = 0;
  double min_abs = 0, max_abs = 0;
  bool pass = true;
};

struct ComplexAbsCheck {
  bool pass = true;
  std::vector<ComplexAbsEntry> entries;
};

/// |g_{n+1}(w) / g_n(w)| over the complex roots w of G_n: above 1 for n > 0, below 1 for n < 0.
ComplexAbsCheck complexabs_check(long n_min, long n_max, double margin = 1e-9);

}  // namespace bv
