#include "bridgevar/knotprops.hpp"

#include <cstdlib>
#include <numeric>

#include "bridgevar/algebra.hpp"
#include "bridgevar/polyseq.hpp"
#include "bridgevar/polytext.hpp"

namespace bv {

namespace {

long floor_half(long k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

long smallest_prime_factor(long n) {
  n = std::labs(n);
  if (n < 2) throw std::invalid_argument("no prime factor");
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

UniPoly shift_down(const UniPoly& f) {
  int low = 0;
  while (low <= f.degree() && f.coeffs()[low] == 0) ++low;
  if (low == 0 || f.is_zero()) return f;
  return UniPoly(std::vector<mpz_class>(f.coeffs().begin() + low, f.coeffs().end()), f.var());
}

void require_even(long l) {
  if (l % 2 != 0) throw std::invalid_argument("l must be even (swap k and l first)");
}

}  // namespace

std::string to_string(KnotClass c) {
  switch (c) {
    case KnotClass::Unknot: return "Unknot";
    case KnotClass::Trefoil: return "Trefoil";
    case KnotClass::TorusNonHyperbolic: return "TorusNonHyperbolic";
    case KnotClass::Hyperbolic: return "Hyperbolic";
    case KnotClass::NotAKnot: return "NotAKnot";
  }
  return "?";
}

KnotId normalize(long k, long l) {
  if ((k * l) % 2 != 0) throw std::invalid_argument("not a knot: kl is odd");
  KnotId id{k, l, k, l, false, {}};
  if (l % 2 != 0) {
    std::swap(id.k, id.l);
    id.swapped = true;
    id.trace.push_back("swap (k,l) -> (l,k) to make l even");
  }
  return id;
}

KnotClass classify(long k, long l) {
  if ((k * l) % 2 != 0) return KnotClass::NotAKnot;
  if (k * l == 0) return KnotClass::Unknot;
  if ((k == 2 && l == 2) || (k == -2 && l == -2)) return KnotClass::Trefoil;
  if (std::labs(k) == 1 || std::labs(l) == 1) return KnotClass::TorusNonHyperbolic;
  return KnotClass::Hyperbolic;
}

mpq_class cont_frac_value(const std::vector<long>& a) {
  if (a.empty()) throw std::invalid_argument("empty continued fraction");
  mpq_class x(a.back());
  for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) x = a[i] + 1 / x;
  return 1 / x;
}

std::vector<long> odd_cont_frac(const mpq_class& x) {
  if (x <= 0 || x > 1) throw std::invalid_argument("continued fraction needs 0 < x <= 1");
  std::vector<long> out;
  mpq_class y = 1 / x;
  for (;;) {
    mpz_class a = y.get_num() / y.get_den();
    out.push_back(a.get_si());
    mpq_class frac = y - mpq_class(a);
    if (frac == 0) break;
    y = 1 / frac;
  }
  if (out.size() % 2 == 0) {
    --out.back();
    out.push_back(1);
  }
  return out;
}

TwoBridgeForm two_bridge_params(long k, long l) {
  if (k * l == 0) throw std::invalid_argument("unknot has no normal form");
  if ((k * l) % 2 != 0) throw std::invalid_argument("not a knot: kl is odd");
  TwoBridgeForm f;
  long d = 1 - k * l;
  f.p = std::labs(d);
  long q = mod(d > 0 ? l : -l, f.p);  // in [0, p)
  if (q == 0) q = f.p;
  if (q % 2 == 0) q -= f.p;
  f.q = q;
  if (std::gcd(f.p, f.q) != 1) throw std::logic_error("two-bridge parameters not coprime");
  if (k == l && mod(f.q * f.q - 1, f.p) != 0) throw std::logic_error("q^2 != 1 mod p for k = l");
  f.epsilon = f.q < 0 ? 1 : 0;
  mpq_class x(f.q + f.epsilon * f.p, f.p);
  x.canonicalize();
  f.cont_frac = odd_cont_frac(x);
  if (cont_frac_value(f.cont_frac) != x) throw std::logic_error("continued fraction does not reconstruct q/p");
  return f;
}

bool same_two_bridge_knot(long p, long q, long p2, long q2) {
  if (p != p2) return false;
  return mod(q - q2, p) == 0 || mod(q * q2 - 1, p) == 0;
}

std::vector<long> fourplat_sequence(long k, long l) {
  if (k > 2 && l > 2) return {1, k - 2, 1, l - 2, 1};
  if (k > 1 && l < 0) return {1, k - 1, -l};
  if (k < 0 && l > 1) return {-k, l - 1, 1};
  if (k < -1 && l < -1) return {-k - 1, 1, -l - 1};
  throw NotCoveredByTable();
}

UniPoly alexander(long k, long l) {
  require_even(l);
  const long n = l / 2;
  if (k == 0 || n == 0) return UniPoly(mpz_class(1), Var::t);
  std::vector<mpz_class> c;
  if (k % 2 == 0) {
    long m = k / 2;
    c = {mpz_class(n * m), mpz_class(1 - 2 * n * m), mpz_class(n * m)};
  } else {
    long m = floor_half(k);
    long N = std::labs(2 * n);
    long end = n > 0 ? m : m + 1;
    c.assign(N + 1, 0);
    c[0] = end;
    c[N] = end;
    for (long i = 1; i < N; ++i) c[i] = (i % 2 == 0 ? 1 : -1) * (1 + 2 * m);
  }
  return shift_down(UniPoly(std::move(c), Var::t));
}

UniPoly alexander_canonical(long k, long l) {
  UniPoly a = alexander(k, l);
  mpz_class at1 = eval<mpz_class>(a, mpz_class(1));
  if (at1 != 1 && at1 != -1) throw std::logic_error("Alexander polynomial with Delta(1) != +-1");
  return at1 < 0 ? -a : a;
}

bool is_fibered(long k, long l) {
  if (k * l == 0) return true;
  KnotId id = normalize(k, l);
  UniPoly a = alexander(id.k, id.l);
  auto unit = [](const mpz_class& c) { return c == 1 || c == -1; };
  return unit(a.lead()) && unit(a.trailing());
}

bool in_fibered_list(long k, long l) {
  if (k * l == 0) return true;
  KnotId id = normalize(k, l);
  k = id.k;
  l = id.l;
  if (std::labs(k) == 2 && std::labs(l) == 2) return true;
  if ((k == 3 && l > 0) || (k == -3 && l < 0)) return true;
  return std::labs(k) == 1;
}

long trace_field_bound(long k, long l) {
  if (k == l) return std::labs(l) - 1;
  if (k * l > 0) return k * l / 2 - 1;
  return std::labs(k * l) / 2;
}

int trace_field_degree_formula(long k, long l, bool canonical) {
  if (canonical && k == l) return static_cast<int>(std::labs(l) - 1);
  if (k * l < 0) return static_cast<int>(-k * l / 2);
  return static_cast<int>(k * l / 2 - 1);
}

UniPoly trace_field_poly(long k, long l, bool canonical) {
  require_even(l);
  if (k * l == 0) throw std::invalid_argument("trace field needs kl != 0");
  UniPoly full = primitive_part(clear_denominators(eval_outer(c_model(k, l).equation, 2)).with_var(Var::r));
  UniPoly out = full;
  if (canonical && k == l) {
    out = UniPoly(mpz_class(1), Var::r) + phi(-k, Var::r) * psi(k, Var::r);
    if (!divides(out, full)) throw std::logic_error("canonical factor does not divide C(l,l) at y = 2");
  }
  if (out.degree() != trace_field_degree_formula(k, l, canonical))
    throw std::logic_error("trace-field polynomial degree differs from the expected degree");
  return out;
}

TraceFieldReport trace_field_report(long k, long l) {
  KnotId id = normalize(k, l);
  if (classify(id.k, id.l) != KnotClass::Hyperbolic) throw Refusal("trace field report needs a hyperbolic knot");
  TraceFieldReport rep;
  rep.bound = trace_field_bound(id.k, id.l);
  rep.poly = trace_field_poly(id.k, id.l, id.k == id.l);
  rep.poly_degree = rep.poly.degree();
  UniPoly sq = squarefree_part(rep.poly);
  rep.squarefree_degree = sq.degree();
  rep.verdict = irreducibility_analysis(sq);
  if (auto* irr = std::get_if<Irreducible>(&rep.verdict)) {
    rep.factor_degrees = {sq.degree()};
    rep.observation = "empirical: polynomial irreducible over Q (mod " + std::to_string(irr->prime) +
                      "), degree " + std::to_string(sq.degree()) + " vs bound " + std::to_string(rep.bound);
  } else if (auto* red = std::get_if<Reducible>(&rep.verdict)) {
    rep.factor_degrees = {red->factor_degree};
    rep.observation = "empirical: polynomial has a rational root " + to_string(red->root);
  } else {
    rep.factor_degrees = std::get<Inconclusive>(rep.verdict).possible_degrees;
    rep.observation = "empirical: irreducibility not decided by the sampled primes";
  }
  return rep;
}

CommensurabilityCertificate commensurability_certificate(long k, long l) {
  CommensurabilityCertificate cert;
  cert.knot = normalize(k, l);
  k = cert.knot.k;
  l = cert.knot.l;
  if (classify(k, l) != KnotClass::Hyperbolic)
    throw Refusal("commensurability certificate needs a hyperbolic knot, got " + to_string(classify(k, l)));
  if (is_fibered(k, l)) {
    cert.verdict = CommVerdict::Fibered;
    return cert;
  }
  cert.verdict = CommVerdict::NotCommensurable;
  const long n = l / 2;
  if (k % 2 != 0) {
    const long m = floor_half(k);
    OddWitness w;
    w.F = UniPoly(mpz_class(m), Var::t) * f_poly(n + 1, Var::t) - UniPoly(mpz_class(k), Var::t) * f_poly(n, Var::t) +
          UniPoly(mpz_class(m + 1), Var::t) * f_poly(n - 1, Var::t);
    w.leading = w.F.lead();
    w.constant = w.F.trailing();
    if (gcd(w.leading, w.constant) != 1) throw std::logic_error("leading and constant terms share a factor");
    w.prime = smallest_prime_factor(w.leading.get_si());
    w.polygon = polygon_at(w.F, w.prime);
    bool found = false;
    for (const auto& s : w.polygon.slopes)
      if (s > 0) {
        w.positive_slope = s;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("no positive slope in the Newton polygon");
    cert.witness = w;
  } else {
    const long m = k / 2;
    EvenWitness w;
    mpq_class inv(1, m * n);
    inv.canonicalize();
    w.point = {2, 2 - inv};
    w.prime = smallest_prime_factor(m * n);
    w.valuation = val_rat(w.point.second - 2, w.prime).value;
    cert.witness = w;
  }
  return cert;
}

bool verify_certificate(const CommensurabilityCertificate& cert) {
  if (cert.verdict == CommVerdict::Fibered) return is_fibered(cert.knot.k, cert.knot.l);
  const BiPoly C = c_model(cert.knot.k, cert.knot.l).equation;
  if (const auto* w = std::get_if<EvenWitness>(&cert.witness)) {
    return eval_point(C, w->point.first, w->point.second) == 0 && w->valuation < 0 &&
           val_rat(w->point.second - 2, w->prime).value == w->valuation;
  }
  if (const auto* w = std::get_if<OddWitness>(&cert.witness)) {
    UniPoly at2 = clear_denominators(eval_inner(C, 2)).with_var(Var::t);
    if (!equal_up_to_unit(at2, w->F)) return false;
    if (gcd(w->leading, w->constant) != 1 || w->leading % w->prime != 0) return false;
    NewtonPolygon np = polygon_at(w->F, w->prime);
    for (const auto& rv : root_valuations(np))
      if (!rv.valuation.infinite && rv.valuation.value < 0) return true;
    return false;
  }
  return false;
}

}  // namespace bv
