#include "bridgevar/algebra.hpp"

#include <stdexcept>

namespace bv {

namespace {

template <class T>
T power(const T& base, int e) {
  T out = RingTraits<T>::from_int(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Subresultant PRS (Cohen, Alg. 3.3.7) over an integral domain with exact division.
template <class T>
T resultant_impl(Poly<T> a, Poly<T> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("undefined resultant");
  if (a.is_zero() || b.is_zero()) return T{};
  if (a.degree() == 0 && b.degree() == 0) return RingTraits<T>::from_int(1);

  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  if (b.degree() == 0) {
    T r = power(b.lead(), a.degree());
    return s < 0 ? T(-r) : r;
  }

  T g = RingTraits<T>::from_int(1);
  T h = RingTraits<T>::from_int(1);
  for (;;) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    Poly<T> r = prem(a, b);
    a = std::move(b);
    T divisor = g * power(h, delta);
    b = exact_quotient(r, divisor);
    g = a.lead();
    if (delta > 0) h = exact_quotient(T(power(g, delta)), T(power(h, delta - 1)));
    if (b.is_zero()) return T{};
    if (b.degree() == 0) {
      int da = a.degree();
      T out = exact_quotient(T(power(b.lead(), da)), T(power(h, da - 1)));
      return s < 0 ? T(-out) : out;
    }
  }
}

}  // namespace

mpz_class resultant(const UniPoly& f, const UniPoly& g) { return resultant_impl<mpz_class>(f, g); }

UniPoly resultant(const BiPoly& f, const BiPoly& g) {
  Var inner = inner_var(f);
  UniPoly out = resultant_impl<UniPoly>(f, g);
  return out.set_var(inner);
}

UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate) {
  if (f.var() == eliminate || g.var() == eliminate) return resultant(f, g);
  return resultant(swap_vars(f), swap_vars(g));
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) return UniPoly(f.var());
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  UniPoly a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = prem(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(a).set_var(f.var());
}

UniPoly derivative_gcd(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("zero polynomial has no squarefree part");
  return poly_gcd(f, derivative(f));
}

UniPoly squarefree_part(const UniPoly& f) {
  UniPoly g = derivative_gcd(f);
  return primitive_part(exact_quotient(primitive_part(f), g));
}

bool is_separable(const UniPoly& f) { return derivative_gcd(f).degree() == 0; }

// ---------------------------------------------------------------------------

Var inner_var(const BiPoly& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) return c.var();
  return Var::r;
}

int inner_degree(const BiPoly& f) {
  int d = kNegInfDegree;
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return d;
}

BiPoly swap_vars(const BiPoly& f) {
  Var outer = f.var();
  Var inner = inner_var(f);
  int di = inner_degree(f);
  if (di < 0) return BiPoly(inner);
  std::vector<std::vector<mpz_class>> cols(di + 1, std::vector<mpz_class>(f.coeffs().size()));
  for (size_t j = 0; j < f.coeffs().size(); ++j) {
    const auto& c = f.coeffs()[j].coeffs();
    for (size_t i = 0; i < c.size(); ++i) cols[i][j] = c[i];
  }
  std::vector<UniPoly> out;
  out.reserve(cols.size());
  for (auto& col : cols) out.emplace_back(std::move(col), outer);
  return BiPoly(std::move(out), inner);
}

BiPoly inner_derivative(const BiPoly& f) {
  std::vector<UniPoly> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(derivative(c));
  return BiPoly(std::move(out), f.var());
}

QPoly eval_outer(const BiPoly& f, const mpq_class& v) {
  Var inner = inner_var(f);
  QPoly acc(inner);
  for (int i = f.degree(); i >= 0; --i) {
    acc *= v;
    acc += to_q(f.coeffs()[i]).set_var(inner);
  }
  return acc;
}

QPoly eval_inner(const BiPoly& f, const mpq_class& v) {
  std::vector<mpq_class> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(eval_q(c, v));
  return QPoly(std::move(out), f.var());
}

mpq_class eval_point(const BiPoly& f, const mpq_class& inner, const mpq_class& outer) {
  return eval<mpq_class>(eval_inner(f, inner), outer);
}

UniPoly substitute_outer(const BiPoly& f, const UniPoly& value) {
  UniPoly acc(value.var());
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * value;
    acc += f.coeffs()[i];
  }
  return acc.set_var(value.var());
}

BiPoly substitute(const UniPoly& p, const BiPoly& q) {
  BiPoly acc(q.var());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * q;
    acc += BiPoly(UniPoly(p.coeffs()[i], inner_var(q)), q.var());
  }
  return acc.set_var(q.var());
}

mpz_class content(const BiPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class cc = content(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
  }
  return g;
}

BiPoly normalize_unit(const BiPoly& f) {
  if (f.is_zero()) return f;
  mpz_class c = content(f);
  if (sgn(f.lead().lead()) < 0) c = -c;
  std::vector<UniPoly> out;
  out.reserve(f.coeffs().size());
  for (const auto& p : f.coeffs()) out.push_back(exact_quotient(p, c));
  return BiPoly(std::move(out), f.var());
}

BiPoly lift_inner(const UniPoly& p, Var outer) { return BiPoly(p, outer); }

BiPoly lift_outer(const UniPoly& p, Var inner) {
  std::vector<UniPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c, inner);
  return BiPoly(std::move(out), p.var());
}

bool equal_up_to_unit(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_unit(a) == normalize_unit(b);
}

bool equal_up_to_unit(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return primitive_part(a) == primitive_part(b);
}

// ---------------------------------------------------------------------------

RatPoly::RatPoly(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  UniPoly g = poly_gcd(num, den);
  if (num.is_zero()) {
    num_ = num;
    den_ = UniPoly(mpz_class(1), den.var());
    return;
  }
  num_ = exact_quotient(num, g);
  den_ = exact_quotient(den, g);
  mpz_class c = gcd(content(num_), content(den_));
  if (sgn(den_.lead()) < 0) c = -c;
  num_ = exact_quotient(num_, c);
  den_ = exact_quotient(den_, c);
}

std::optional<mpq_class> RatPoly::eval(const mpq_class& x) const {
  mpq_class d = eval_q(den_, x);
  if (sgn(d) == 0) return std::nullopt;
  return mpq_class(eval_q(num_, x) / d);
}

}  // namespace bv
