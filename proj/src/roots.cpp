#include "bridgevar/roots.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <map>

#include "bridgevar/algebra.hpp"

namespace bv {

namespace {

using HiReal = boost::multiprecision::cpp_bin_float_50;
using HiComplex = boost::multiprecision::cpp_complex_50;

// Prime factorization by trial division; false when a large cofactor is left.
bool factor_small(mpz_class n, std::map<mpz_class, int>& out) {
  n = abs(n);
  for (unsigned long d = 2; d <= 1000000 && mpz_class(d) * d <= n; ++d) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++out[mpz_class(d)];
      n /= d;
    }
  }
  if (n == 1) return true;
  if (mpz_class(1000000) * 1000000 >= n || mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return true;
  }
  return false;
}

std::vector<mpz_class> divisors(const std::map<mpz_class, int>& fac) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : fac) {
    size_t n = out.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < n; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

HiComplex hi_eval(const std::vector<HiComplex>& c, const HiComplex& z) {
  HiComplex acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

std::vector<HiComplex> aberth(const UniPoly& f, double tol, bool& ok);

// Candidates from continued-fraction convergents of approximate real roots.
std::vector<mpq_class> numeric_candidates(const UniPoly& f) {
  std::vector<mpq_class> out;
  bool ok = false;
  auto zs = aberth(f, 1e-12, ok);
  for (const auto& z : zs) {
    if (abs(z.imag()) > 1e-20 * (1 + abs(z.real()))) continue;
    HiReal x = z.real();
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int i = 0; i < 60; ++i) {
      HiReal a = floor(x);
      if (abs(a) > HiReal("1e18")) break;
      mpz_class ai(std::to_string(a.convert_to<long long>()));
      mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
      out.emplace_back(p2, q2);
      out.back().canonicalize();
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      HiReal frac = x - a;
      if (frac < HiReal("1e-40")) break;
      x = 1 / frac;
    }
  }
  return out;
}

std::vector<HiComplex> aberth(const UniPoly& f, double tol, bool& ok) {
  int n = f.degree();
  std::vector<HiComplex> c;
  c.reserve(n + 1);
  HiReal norm = 0;
  for (const auto& a : f.coeffs()) {
    HiReal v(a.get_str());
    c.emplace_back(v, 0);
    norm = std::max(norm, HiReal(abs(v)));
  }
  std::vector<HiComplex> dc;
  for (int i = 1; i <= n; ++i) dc.push_back(c[i] * HiReal(i));

  HiReal lead = abs(c[n].real());
  HiReal radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, HiReal(abs(c[i].real()) / lead));
  radius += 1;

  std::vector<HiComplex> z(n);
  const HiReal two_pi = 2 * boost::math::constants::pi<HiReal>();
  for (int i = 0; i < n; ++i) {
    HiReal ang = two_pi * i / n + HiReal(0.4);
    HiReal rad = radius * (1 + HiReal(i) / (10 * n));
    z[i] = HiComplex(rad * cos(ang), rad * sin(ang));
  }

  auto residual = [&](const HiComplex& x) { return HiReal(abs(hi_eval(c, x)) / norm); };
  const HiReal target(tol);
  const HiReal tiny("1e-45");
  ok = false;
  int settled_rounds = 0;
  for (int iter = 0; iter < 200; ++iter) {
    HiReal max_step = 0;
    for (int i = 0; i < n; ++i) {
      HiComplex fv = hi_eval(c, z[i]);
      if (abs(fv) == 0) continue;
      HiComplex ratio = fv / hi_eval(dc, z[i]);
      HiComplex sum(0);
      for (int j = 0; j < n; ++j)
        if (j != i) sum += HiComplex(1) / (z[i] - z[j]);
      HiComplex step = ratio / (HiComplex(1) - ratio * sum);
      z[i] -= step;
      max_step = std::max(max_step, HiReal(abs(step) / (1 + abs(z[i]))));
    }
    bool all_ok = true;
    for (int i = 0; i < n && all_ok; ++i) all_ok = residual(z[i]) < target;
    if (all_ok && max_step < tiny) {
      ok = true;
      break;
    }
    if (all_ok && ++settled_rounds > 8) {
      ok = true;
      break;
    }
  }
  if (!ok) {
    bool all_ok = true;
    for (int i = 0; i < n && all_ok; ++i) all_ok = residual(z[i]) < target;
    ok = all_ok;
  }
  return z;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("rational roots of zero polynomial");
  std::vector<RationalRoot> out;
  UniPoly g = primitive_part(f);
  int zero_mult = 0;
  while (!g.is_zero() && sgn(g.trailing()) == 0) {
    g = exact_quotient(g, UniPoly::gen(g.var()));
    ++zero_mult;
  }
  if (zero_mult) out.push_back({mpq_class(0), zero_mult});
  if (g.degree() < 1) return out;

  UniPoly s = squarefree_part(g);
  std::vector<mpq_class> cands;
  std::map<mpz_class, int> fa, fb;
  if (factor_small(s.trailing(), fa) && factor_small(s.lead(), fb)) {
    mpz_class v1 = eval<mpz_class>(s, mpz_class(1));
    mpz_class vm1 = eval<mpz_class>(s, mpz_class(-1));
    // a/b is a root only if (b - a) | s(1) and (b + a) | s(-1).
    auto plausible = [&](const mpz_class& a, const mpz_class& b) {
      mpz_class d1 = b - a, d2 = b + a;
      if (sgn(v1) != 0 && sgn(d1) != 0 && !mpz_divisible_p(v1.get_mpz_t(), d1.get_mpz_t())) return false;
      if (sgn(vm1) != 0 && sgn(d2) != 0 && !mpz_divisible_p(vm1.get_mpz_t(), d2.get_mpz_t())) return false;
      return true;
    };
    for (const auto& a : divisors(fa))
      for (const auto& b : divisors(fb)) {
        if (gcd(a, b) != 1) continue;
        if (plausible(a, b)) cands.emplace_back(a, b);
        if (plausible(-a, b)) cands.emplace_back(-a, b);
      }
  } else {
    cands = numeric_candidates(s);
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& x : cands) {
    if (sgn(eval_q(s, x)) != 0) continue;
    UniPoly lin = UniPoly(std::vector<mpz_class>{-x.get_num(), x.get_den()}, g.var());
    int mult = 0;
    UniPoly h = g;
    while (divides(lin, h)) {
      h = exact_quotient(h, lin);
      ++mult;
    }
    out.push_back({x, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

std::vector<std::complex<double>> complex_roots(const UniPoly& f, double tol) {
  if (f.degree() < 1) throw std::domain_error("complex roots of a constant");
  bool ok = false;
  auto z = aberth(f, tol, ok);
  std::vector<std::complex<double>> out;
  out.reserve(z.size());
  for (const auto& x : z) out.emplace_back(x.real().convert_to<double>(), x.imag().convert_to<double>());
  auto key = [](const std::complex<double>& v) {
    return std::pair<double, double>(std::round(v.real() * 1e9) / 1e9, std::round(v.imag() * 1e9) / 1e9);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  if (!ok) throw RootFindingError("root iteration did not converge", out);
  return out;
}

double abs_eval(const UniPoly& p, std::complex<double> z) {
  HiComplex hz(z.real(), z.imag());
  HiComplex acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * hz + HiComplex(HiReal(p.coeffs()[i].get_str()), 0);
  return static_cast<double>(abs(acc).convert_to<double>());
}

}  // namespace bv
