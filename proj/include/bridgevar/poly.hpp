#pragma once

// Dense univariate polynomials templated on the coefficient ring.
//
// Poly<mpz_class> is the integer polynomial type used throughout, Poly<mpq_class>
// carries rational arithmetic where a field is needed, and Poly<Poly<mpz_class>>
// is the bivariate type (outer variable over coefficients in the inner one).

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bv {

enum class Var : char { u = 'u', r = 'r', t = 't', y = 'y', x = 'x', S = 'S', s = 's', lambda = 'L' };

inline char var_char(Var v) { return static_cast<char>(v); }

/// Degree reported for the zero polynomial.
inline constexpr int kNegInfDegree = INT_MIN;

template <class T>
class Poly;

template <class T>
struct RingTraits;

template <>
struct RingTraits<mpz_class> {
  static mpz_class from_int(long v) { return mpz_class(v); }
  static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
};

template <>
struct RingTraits<mpq_class> {
  static mpq_class from_int(long v) { return mpq_class(v); }
  static bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
};

template <class T>
struct RingTraits<Poly<T>> {
  static Poly<T> from_int(long v) { return Poly<T>(RingTraits<T>::from_int(v)); }
  static bool is_zero(const Poly<T>& a) { return a.is_zero(); }
};

template <class T>
inline bool is_zero(const T& a) {
  return RingTraits<T>::is_zero(a);
}

template <class T>
class Poly {
 public:
  using Scalar = T;

  Poly() = default;
  explicit Poly(Var v) : var_(v) {}
  explicit Poly(T c, Var v = Var::u) : var_(v) {
    if (!bv::is_zero(c)) coeffs_.push_back(std::move(c));
  }
  Poly(std::vector<T> c, Var v) : coeffs_(std::move(c)), var_(v) { normalize(); }

  static Poly from_ints(std::initializer_list<long> c, Var v = Var::u) {
    std::vector<T> out;
    out.reserve(c.size());
    for (long x : c) out.push_back(RingTraits<T>::from_int(x));
    return Poly(std::move(out), v);
  }
  static Poly monomial(T c, int e, Var v = Var::u) {
    if (bv::is_zero(c)) return Poly(v);
    std::vector<T> out(static_cast<size_t>(e) + 1);
    out[e] = std::move(c);
    return Poly(std::move(out), v);
  }
  /// The variable itself.
  static Poly gen(Var v) { return monomial(RingTraits<T>::from_int(1), 1, v); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<T>& coeffs() const { return coeffs_; }
  Var var() const { return var_; }
  Poly& set_var(Var v) {
    var_ = v;
    return *this;
  }
  Poly with_var(Var v) const {
    Poly p = *this;
    p.var_ = v;
    return p;
  }

  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return T{};
    return coeffs_[i];
  }
  const T& lead() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  /// Lowest-index coefficient (the value at zero).
  T trailing() const { return coeff(0); }

  Poly& operator+=(const Poly& o) {
    if (coeffs_.empty()) var_ = o.var_;
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (coeffs_.empty()) var_ = o.var_;
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const T& c) {
    if (bv::is_zero(c)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Var v = a.coeffs_.empty() || a.is_constant() ? b.var_ : a.var_;
    if (a.coeffs_.empty() || b.coeffs_.empty()) return Poly(v);
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (bv::is_zero(a.coeffs_[i])) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out), v);
  }
  friend Poly operator*(Poly a, const T& c) { return a *= c; }
  friend Poly operator*(const T& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Multiply by var^k.
  Poly shifted(int k) const {
    if (coeffs_.empty() || k == 0) return *this;
    std::vector<T> out(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
    return Poly(std::move(out), var_);
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && bv::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
  Var var_ = Var::u;
};

using UniPoly = Poly<mpz_class>;
using QPoly = Poly<mpq_class>;
/// Polynomial in an outer variable with UniPoly coefficients in the inner one.
using BiPoly = Poly<UniPoly>;

// ---------------------------------------------------------------------------
// Exact quotients in the coefficient rings.

inline mpz_class exact_quotient(const mpz_class& a, const mpz_class& b) {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::domain_error("inexact integer division");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline mpq_class exact_quotient(const mpq_class& a, const mpq_class& b) {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  return a / b;
}

/// a / b, throwing std::domain_error when b does not divide a exactly.
template <class T>
Poly<T> exact_quotient(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly<T>(a.var());
  int db = b.degree();
  std::vector<T> rem = a.coeffs();
  if (a.degree() < db) throw std::domain_error("inexact polynomial division");
  std::vector<T> q(a.degree() - db + 1);
  const T& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(rem[i])) continue;
    T c = exact_quotient(rem[i], lb);
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
    q[i - db] = std::move(c);
  }
  for (int i = 0; i < db; ++i)
    if (!is_zero(rem[i])) throw std::domain_error("inexact polynomial division");
  return Poly<T>(std::move(q), a.var());
}

template <class T>
Poly<T> exact_quotient(const Poly<T>& a, const T& c) {
  std::vector<T> out;
  out.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) out.push_back(exact_quotient(x, c));
  return Poly<T>(std::move(out), a.var());
}

template <class T>
bool divides(const Poly<T>& b, const Poly<T>& a) {
  try {
    (void)exact_quotient(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Calculus and evaluation.

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() <= 0) return Poly<T>(p.var());
  std::vector<T> out(p.degree());
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeffs()[i] * RingTraits<T>::from_int(i);
  return Poly<T>(std::move(out), p.var());
}

/// Horner evaluation at a value of any type that accepts the coefficients.
template <class V, class T>
V eval(const Poly<T>& p, const V& x) {
  V acc{};
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x;
    acc += V(p.coeffs()[i]);
  }
  return acc;
}

inline mpq_class eval_q(const UniPoly& p, const mpq_class& x) { return eval<mpq_class>(p, x); }

/// p(q): substitute a polynomial for the variable (result in q's variable).
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q) {
  Poly<T> acc(q.var());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * q;
    acc += Poly<T>(p.coeffs()[i], q.var());
  }
  return acc.set_var(q.var());
}

template <class T>
Poly<T> pow(const Poly<T>& p, unsigned e) {
  Poly<T> result(RingTraits<T>::from_int(1), p.var());
  Poly<T> base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Division.

/// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a = q*b + r.
template <class T>
Poly<T> prem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
  int da = a.degree(), db = b.degree();
  if (a.is_zero() || da < db) return a;
  std::vector<T> r = a.coeffs();
  const T& lb = b.lead();
  int e = da - db + 1;
  for (int i = da; i >= db; --i) {
    T c = r[i];
    for (int j = 0; j < i; ++j) r[j] *= lb;
    r[i] = T{};
    if (!is_zero(c))
      for (int j = 0; j < db; ++j) r[i - db + j] -= c * b.coeffs()[j];
    --e;
  }
  Poly<T> out(std::move(r), a.var());
  if (e > 0) {
    T f = RingTraits<T>::from_int(1);
    for (int i = 0; i < e; ++i) f *= lb;
    out *= f;
  }
  return out;
}

/// Euclidean division over a field.
inline std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  int db = b.degree();
  if (a.degree() < db) return {QPoly(a.var()), a};
  std::vector<mpq_class> r = a.coeffs();
  std::vector<mpq_class> q(a.degree() - db + 1);
  mpq_class inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    mpq_class c = r[i] * inv;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs()[j];
    q[i - db] = c;
  }
  r.resize(db);
  return {QPoly(std::move(q), a.var()), QPoly(std::move(r), a.var())};
}

inline QPoly rem(const QPoly& a, const QPoly& b) { return divrem(a, b).second; }

// ---------------------------------------------------------------------------
// Integer content and conversions.

inline mpz_class content(const UniPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = content(p);
  if (sgn(p.lead()) < 0) c = -c;
  return exact_quotient(p, c);
}

inline QPoly to_q(const UniPoly& p) {
  std::vector<mpq_class> out(p.coeffs().begin(), p.coeffs().end());
  return QPoly(std::move(out), p.var());
}

/// Scale a rational polynomial to a primitive integer one with positive lead.
inline UniPoly clear_denominators(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  return primitive_part(UniPoly(std::move(out), p.var()));
}

/// Largest absolute coefficient.
inline mpz_class height(const UniPoly& p) {
  mpz_class h = 0;
  for (const auto& c : p.coeffs())
    if (abs(c) > h) h = abs(c);
  return h;
}

}  // namespace bv
