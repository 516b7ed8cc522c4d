#include "bridgevar/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "bridgevar/algebra.hpp"
#include "bridgevar/polyseq.hpp"
#include "bridgevar/polytext.hpp"
#include "bridgevar/roots.hpp"

namespace bv {

namespace {

// ---------------------------------------------------------------------------
// Polynomials in t over Q[r]/(P), P squarefree, with splitting of P whenever a
// leading coefficient turns out to be a zero divisor.

using TPoly = std::vector<QPoly>;

struct Branch {
  QPoly P;
  TPoly G;
};

void trim(TPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

TPoly reduce(const TPoly& a, const QPoly& P) {
  TPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(rem(c, P));
  trim(out);
  return out;
}

QPoly qgcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : to_q(primitive_part(clear_denominators(b)));
  if (b.is_zero()) return to_q(primitive_part(clear_denominators(a)));
  return to_q(poly_gcd(clear_denominators(a), clear_denominators(b)));
}

QPoly inv_mod(const QPoly& c, const QPoly& P) {
  QPoly r0 = P, r1 = c;
  QPoly s0(P.var()), s1(mpq_class(1), P.var());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::logic_error("inverse of a zero divisor");
  return rem(s0 * mpq_class(1 / r0.lead()), P);
}

QPoly quotient(const QPoly& a, const QPoly& b) { return divrem(a, b).first; }

std::vector<Branch> make_monic(TPoly A, const QPoly& P) {
  A = reduce(A, P);
  if (A.empty()) return {{P, {}}};
  QPoly g = qgcd(A.back(), P);
  if (g.degree() > 0) {
    TPoly dropped(A.begin(), A.end() - 1);
    auto out = make_monic(dropped, g);
    auto rest = make_monic(A, quotient(P, g));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  QPoly inv = inv_mod(A.back(), P);
  for (auto& c : A) c = rem(c * inv, P);
  return {{P, A}};
}

std::vector<Branch> split_gcd(TPoly A, TPoly B, const QPoly& P) {
  A = reduce(A, P);
  B = reduce(B, P);
  for (;;) {
    if (B.empty()) return make_monic(A, P);
    QPoly g = qgcd(B.back(), P);
    if (g.degree() > 0) {
      auto out = split_gcd(A, B, g);
      auto rest = split_gcd(A, B, quotient(P, g));
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    QPoly inv = inv_mod(B.back(), P);
    while (A.size() >= B.size()) {
      QPoly c = rem(A.back() * inv, P);
      size_t shift = A.size() - B.size();
      for (size_t i = 0; i < B.size(); ++i) A[shift + i] = rem(A[shift + i] - c * B[i], P);
      trim(A);
    }
    std::swap(A, B);
  }
}

TPoly to_tpoly(const BiPoly& f) {
  TPoly out;
  for (const auto& c : f.coeffs()) out.push_back(to_q(c.with_var(Var::r)));
  return out;
}

// Remainder of a polynomial in t (constant in r) modulo a monic G over Q[r]/(P).
TPoly rem_monic(const UniPoly& a, const TPoly& G, const QPoly& P) {
  TPoly A;
  for (const auto& c : a.coeffs()) A.push_back(QPoly(mpq_class(c), Var::r));
  trim(A);
  while (A.size() >= G.size()) {
    QPoly c = A.back();
    size_t shift = A.size() - G.size();
    for (size_t i = 0; i < G.size(); ++i) A[shift + i] = rem(A[shift + i] - c * G[i], P);
    trim(A);
  }
  return A;
}

BiPoly outer_derivative(const BiPoly& f) { return derivative(f); }

UniPoly t_content(const BiPoly& f) {
  UniPoly g(Var::r);
  for (const auto& c : f.coeffs()) g = poly_gcd(g, c);
  return g;
}

// Reverse the inner variable up to degree d: rho^d f(1/rho, outer).
BiPoly reverse_inner(const BiPoly& f, int d) {
  std::vector<UniPoly> out;
  for (const auto& c : f.coeffs()) {
    std::vector<mpz_class> cs(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= c.degree(); ++i) cs[d - i] = c.coeffs()[i];
    out.emplace_back(std::move(cs), c.var());
  }
  return BiPoly(std::move(out), f.var());
}

int distinct_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::logic_error("zero polynomial has no finite root count");
  return std::max(0, squarefree_part(p).degree());
}

// ---------------------------------------------------------------------------

struct LineData {
  UniPoly finite;  // polynomial whose roots are the finite points on the line
  int points = 0;
  int corner_multiplicity = 0;
};

// Intersection of the curve with the line where the inner variable is infinite.
LineData line_at_inner_infinity(const BiPoly& F) {
  // F viewed with inner-major coefficients: top inner coefficient as a polynomial in the outer variable.
  BiPoly sw = swap_vars(F);
  LineData d;
  d.finite = sw.lead();
  int b = F.degree();
  d.corner_multiplicity = b - d.finite.degree();
  d.points = distinct_roots(d.finite) + (d.corner_multiplicity > 0 ? 1 : 0);
  return d;
}

bool has_root_at_zero(const QPoly& P) { return P.coeff(0) == 0; }

// The Q-points of an even/odd valuation analysis at infinity.
struct MonomialMax {
  int total = -1;
  int count = 0;
};

MonomialMax max_total_degree(const BiPoly& h) {
  MonomialMax m;
  for (int j = 0; j <= h.degree(); ++j) {
    const UniPoly& c = h.coeffs()[j];
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeffs()[i] == 0) continue;
      if (i + j > m.total) m = {i + j, 1};
      else if (i + j == m.total) ++m.count;
    }
  }
  return m;
}

bool coprime(const UniPoly& a, const UniPoly& b) { return poly_gcd(a, b).degree() <= 0; }

// Number of points of F = 0 at infinity where h has odd valuation.  Requires
// transversality along both lines and h's top coefficients to be nonzero there.
int odd_points_at_infinity(const BiPoly& F, const BiPoly& h) {
  InfinityReport inf = infinity_transversality(F);
  if (!inf.transversal) throw std::logic_error("curve is not transversal at infinity");
  int count = 0;
  // r = oo, t finite: ord = -deg_r h
  LineData lr = line_at_inner_infinity(F);
  UniPoly h_rtop = swap_vars(h).lead();
  if (!coprime(lr.finite, h_rtop)) throw std::logic_error("h degenerates on the line r = oo");
  if (inner_degree(h) % 2 != 0) count += distinct_roots(lr.finite);
  // t = oo, r finite: ord = -deg_t h
  LineData lt = line_at_inner_infinity(swap_vars(F));
  UniPoly h_ttop = h.lead();
  if (!coprime(lt.finite, h_ttop)) throw std::logic_error("h degenerates on the line t = oo");
  if (h.degree() % 2 != 0) count += distinct_roots(lt.finite);
  if (inf.corner_on_curve) {
    MonomialMax mm = max_total_degree(h);
    if (mm.count != 1) throw std::logic_error("h has no dominant monomial at (oo,oo)");
    if (mm.total % 2 != 0) ++count;
  }
  return count;
}

UniPoly require_separable(const UniPoly& p, const char* what) {
  if (!is_separable(p)) throw std::runtime_error(std::string("separability failure: ") + what);
  return p;
}

// Odd points of h = (r-2)(2 - t + (r^2-4) f_m(r)^2) on F = 0, k = 2m.
int odd_points_even_oracle(const BiPoly& F, long m) {
  const UniPoly r = UniPoly::gen(Var::r);
  const UniPoly fm = f_poly(m, Var::r);
  const UniPoly T = (r * r - UniPoly(mpz_class(4), Var::r)) * fm * fm + UniPoly(mpz_class(2), Var::r);
  UniPoly FT = substitute_outer(F, T);
  if (FT.is_zero()) throw std::runtime_error("curve contains the ramification curve");
  require_separable(FT, "F(r, T(r))");
  UniPoly M = clear_denominators(eval_inner(F, 2));
  int m_points = 0;
  if (!M.is_zero()) m_points = require_separable(M, "F(2, t)").degree();
  int overlap = eval_point(F, 2, 2) == 0 ? 1 : 0;
  int affine = (m_points - overlap) + (std::max(0, FT.degree()) - overlap);

  BiPoly h_line = parse_bipoly("r-2", Var::t, Var::r);
  BiPoly d = lift_inner(T, Var::t) - parse_bipoly("t", Var::t, Var::r);
  return affine + odd_points_at_infinity(F, h_line * d);
}

// Odd points of h = t - 2 + (r+2) g_{m+1}(r)^2 on F = 0, k = 2m+1.
int odd_points_odd_oracle(const BiPoly& F, long m) {
  const UniPoly r = UniPoly::gen(Var::r);
  const UniPoly g = g_poly(m + 1, Var::r);
  const UniPoly T = UniPoly(mpz_class(2), Var::r) - (r + UniPoly(mpz_class(2), Var::r)) * g * g;
  UniPoly FT = substitute_outer(F, T);
  if (FT.is_zero()) throw std::runtime_error("curve contains the ramification curve");
  require_separable(FT, "F(r, T(r))");
  BiPoly h = parse_bipoly("t", Var::t, Var::r) - lift_inner(T, Var::t);
  return std::max(0, FT.degree()) + odd_points_at_infinity(F, h);
}

long floor_half(long k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

int odd_point_oracle(const BiPoly& F, long k) {
  long m = floor_half(k);
  return k % 2 == 0 ? odd_points_even_oracle(F, m) : odd_points_odd_oracle(F, m);
}

void require_nondegenerate(long k, long l) {
  if (l % 2 != 0) throw std::invalid_argument("l must be even (swap k and l first)");
  if (std::labs(k) < 2 || l == 0) throw std::invalid_argument("degenerate case: need |k| >= 2 and l != 0");
  if (k == l && std::labs(l) == 2) throw std::invalid_argument("degenerate case: LineUnion/trefoil");
}

}  // namespace

// ---------------------------------------------------------------------------

std::string SingularBranch::describe() const {
  std::string out = "P(r) = " + to_string(P) + ", G(t) = ";
  if (G.empty()) return out + "0";
  std::string gs;
  for (int i = static_cast<int>(G.size()) - 1; i >= 0; --i) {
    if (G[i].is_zero()) continue;
    if (!gs.empty()) gs += " + ";
    gs += "(" + to_string(G[i]) + ")";
    if (i > 0) gs += i == 1 ? "*t" : "*t^" + std::to_string(i);
  }
  return out + gs;
}

AffineLocus affine_singular_locus(const BiPoly& F) {
  if (F.is_zero() || (F.degree() <= 0 && inner_degree(F) <= 0))
    throw std::invalid_argument("affine_singular_locus needs a nonconstant polynomial");
  AffineLocus out;
  const UniPoly cont = t_content(F);
  if (cont.degree() > 0 && !is_separable(cont)) throw std::domain_error("non-reduced input");
  BiPoly pp = F;
  if (cont.degree() > 0) pp = exact_quotient(F, cont);
  if (pp.degree() > 0 && resultant(pp, outer_derivative(pp)).is_zero()) throw std::domain_error("non-reduced input");

  if (F.degree() <= 0 || inner_degree(F) <= 0) return out;

  const BiPoly Ft = outer_derivative(F), Fr = inner_derivative(F);
  UniPoly R1 = resultant(F, Ft);
  UniPoly R2 = resultant(F, Fr);
  out.res_t_ft_degree = R1.degree();
  out.res_t_fr_degree = R2.degree();
  UniPoly G = poly_gcd(R1, R2);
  out.gcd_degree = G.degree();
  if (G.degree() <= 0) return out;

  QPoly P = to_q(squarefree_part(G).with_var(Var::r));
  for (auto& b1 : split_gcd(to_tpoly(F), to_tpoly(Ft), P)) {
    for (auto& b2 : split_gcd(b1.G, to_tpoly(Fr), b1.P)) {
      if (b2.G.empty()) throw std::domain_error("non-reduced input");
      if (b2.G.size() < 2) continue;
      SingularBranch sb;
      sb.P = clear_denominators(b2.P).with_var(Var::r);
      for (auto& c : b2.G) sb.G.push_back(c.with_var(Var::r));
      for (const auto& rr : rational_roots(sb.P)) {
        std::vector<mpq_class> gt;
        for (const auto& c : sb.G) gt.push_back(eval<mpq_class>(c, rr.value));
        UniPoly gq = clear_denominators(QPoly(std::move(gt), Var::t));
        if (gq.is_zero()) continue;
        for (const auto& tr : rational_roots(gq)) {
          Point p{rr.value, tr.value};
          if (eval_point(F, p.first, p.second) != 0 || eval_point(Ft, p.first, p.second) != 0 ||
              eval_point(Fr, p.first, p.second) != 0)
            throw std::logic_error("singular candidate failed exact substitution");
          sb.rational_points.push_back(p);
        }
      }
      out.branches.push_back(std::move(sb));
    }
  }
  out.empty = out.branches.empty();
  return out;
}

InfinityReport infinity_transversality(const BiPoly& F) {
  InfinityReport rep;
  if (F.is_zero()) throw std::invalid_argument("zero polynomial");
  rep.bidegree = bidegree_of(F);
  const int a = rep.bidegree.r, b = rep.bidegree.t;
  const BiPoly Fsw = swap_vars(F);

  LineData lr = line_at_inner_infinity(F);    // r = oo
  LineData lt = line_at_inner_infinity(Fsw);  // t = oo
  rep.points_on_r_infinity = lr.points;
  rep.points_on_t_infinity = lt.points;
  rep.corner_on_curve = lr.corner_multiplicity > 0;
  if (lr.points != b) {
    rep.transversal = false;
    rep.witnesses.push_back("r=oo meets the curve in " + std::to_string(lr.points) + " points, expected " +
                            std::to_string(b));
  }
  if (lt.points != a) {
    rep.transversal = false;
    rep.witnesses.push_back("t=oo meets the curve in " + std::to_string(lt.points) + " points, expected " +
                            std::to_string(a));
  }

  // Singular points on the two lines, from the affine charts at infinity.
  auto chart_check = [&](const BiPoly& chart, const char* line) {
    if (chart.degree() <= 0 || inner_degree(chart) <= 0) return;
    AffineLocus loc = affine_singular_locus(chart);
    for (const auto& br : loc.branches) {
      if (has_root_at_zero(to_q(br.P))) {
        rep.transversal = false;
        rep.witnesses.push_back(std::string("singular point on ") + line + ": " + br.describe());
      }
    }
  };
  chart_check(reverse_inner(F, a), "r=oo");
  chart_check(reverse_inner(Fsw, b), "t=oo");

  if (rep.corner_on_curve) {
    // rho^a tau^b F(1/rho, 1/tau) near (0,0)
    auto coeff = [&](int i, int j) -> mpz_class {
      if (i < 0 || j < 0 || j > F.degree()) return 0;
      return F.coeffs()[j].coeff(i);
    };
    if (coeff(a - 1, b) == 0 && coeff(a, b - 1) == 0) {
      rep.transversal = false;
      rep.witnesses.push_back("singular at (oo,oo)");
    }
  }
  return rep;
}

SmoothnessCertificate smoothness_certificate(long k, long l) {
  SmoothnessCertificate cert;
  cert.k = k;
  cert.l = l;
  if (l % 2 != 0) throw std::invalid_argument("l must be even (swap k and l first)");
  CurveModel d = d_model(k, l);
  if (d.state != ModelState::Curve) {
    cert.refused = true;
    cert.refusal = to_string(d.state);
    if (k == l && std::labs(k) == 2) cert.refusal += "/trefoil";
    return cert;
  }
  BiPoly F = d.equation;
  if (k == l) {
    DSplit s = d_split(l);
    if (s.d1.state != ModelState::Curve) {
      cert.refused = true;
      cert.refusal = "D1 " + to_string(s.d1.state);
      return cert;
    }
    cert.target = ModelKind::D1;
    cert.union_locus = affine_singular_locus(d.equation);
    for (const auto& br : cert.union_locus->branches)
      cert.union_intersections += br.P.degree() * (static_cast<int>(br.G.size()) - 1);
    F = s.d1.equation;
  }
  cert.affine = affine_singular_locus(F);
  cert.infinity = infinity_transversality(F);

  // Every singular point of a D-curve lies over Delta_k(r) = 0, Delta_l(t) = 0.
  auto consistent = [&](const AffineLocus& loc) {
    const QPoly dk = to_q(delta(k, Var::r));
    const UniPoly dl = delta(l, Var::t);
    for (const auto& br : loc.branches) {
      QPoly P = to_q(br.P);
      if (!rem(dk, P).is_zero()) return false;
      if (!rem_monic(dl, br.G, P).empty()) return false;
    }
    return true;
  };
  cert.delta_filter_consistent = consistent(cert.affine) && (!cert.union_locus || consistent(*cert.union_locus));
  return cert;
}

ComponentCount component_count(long k, long l) {
  ComponentCount cc;
  if (l % 2 != 0) throw std::invalid_argument("l must be even (swap k and l first)");
  CurveModel d = d_model(k, l);
  if (d.state != ModelState::Curve) {
    cc.degenerate = true;
    cc.description = to_string(d.state) + " bidegree (" + std::to_string(d.bidegree.r) + "," +
                     std::to_string(d.bidegree.t) + ")";
    return cc;
  }
  SmoothnessCertificate cert = smoothness_certificate(k, l);
  if (k == l) {
    cc.count = 2;
    cc.description = "D0 line and D1";
    DSplit s = d_split(l);
    cc.cross_checked = cert.smooth() && s.d1.bidegree.r > 0 && s.d1.bidegree.t > 0;
  } else {
    cc.count = 1;
    cc.description = "irreducible";
    cc.cross_checked = cert.smooth() && d.bidegree.r > 0 && d.bidegree.t > 0;
  }
  return cc;
}

int genus_Y_formula(long k, long l) { return static_cast<int>((std::labs(k) / 2 - 1) * (std::labs(l) / 2 - 1)); }

int genus_X_formula(long k, long l) {
  long m = floor_half(k), n = l / 2;
  bool odd = k % 2 != 0;
  long a = odd && k < 0 ? 4 : 1;
  long b = 0;
  if (odd && k < 0 && l > 0) b = 2;
  else if (odd && l < 0) b = 1;
  else if (!odd && k * l > 0) b = -1;
  return static_cast<int>(3 * std::labs(m * n) - std::labs(m) - a * std::labs(n) + b);
}

int odd_point_formula(long k, long l, int* case_constant, bool* uncovered) {
  long m = floor_half(k), n = l / 2;
  long a = 0, value = 0;
  bool unc = false;
  if (k % 2 == 0) {
    a = m * n > 0 ? 2 : 1;
    value = 2 * std::labs(m * n) + 2 * std::labs(m) + 2 * std::labs(n) - 2 * a;
  } else {
    if (m == 0 || m == -1) throw std::invalid_argument("odd-point count needs |k| >= 2");
    if (n > 0) {
      a = 1;
      unc = m < 0;
    } else if (m < 0) {
      a = 2;
    } else {
      a = 0;
    }
    value = std::labs(2 * m + 1) * std::labs(n) + std::labs(n) + 2 * std::labs(m) - 2 * a;
  }
  if (case_constant) *case_constant = static_cast<int>(a);
  if (uncovered) *uncovered = unc;
  return static_cast<int>(value);
}

OddPointCount odd_point_count(long k, long l, Component which) {
  require_nondegenerate(k, l);
  OddPointCount out;
  int total = odd_point_formula(k, l, &out.case_constant, &out.uncovered_case);
  long n = std::labs(l / 2);
  if (k != l) {
    if (which != Component::Whole) throw std::invalid_argument("D0/D1 components exist only for k = l");
    out.formula = total;
    out.oracle = odd_point_oracle(d_model(k, l).equation, k);
    return out;
  }
  DSplit s = d_split(l);
  int o0 = odd_point_oracle(s.d0.equation, k);
  int o1 = odd_point_oracle(s.d1.equation, k);
  switch (which) {
    case Component::Whole:
      out.formula = total;
      out.oracle = o0 + o1;
      break;
    case Component::D0:
      out.formula = static_cast<int>(2 * n);
      out.oracle = o0;
      break;
    case Component::D1:
      out.formula = total - static_cast<int>(2 * n);
      out.oracle = o1;
      break;
  }
  return out;
}

GenusY genus_Y(long k, long l, const SmoothnessCertificate& cert) {
  require_nondegenerate(k, l);
  if (cert.k != k || cert.l != l || !cert.smooth()) throw std::logic_error("genus requires a passing smoothness certificate");
  GenusY g;
  if (k != l) {
    Bidegree bd = d_model(k, l).bidegree;
    g.genus_bidegree = (bd.r - 1) * (bd.t - 1);
    g.genus_formula = genus_Y_formula(k, l);
    g.hyperelliptic = bd.r <= 2 || bd.t <= 2;
    return g;
  }
  DSplit s = d_split(l);
  Bidegree bd = s.d1.bidegree;
  g.d0_genus = 0;
  g.d1_genus_bidegree = (bd.r - 1) * (bd.t - 1);
  long e = std::labs(l) / 2 - 2;
  g.d1_genus_formula = static_cast<int>(e * e);
  g.d1_hyperelliptic = bd.r <= 2 || bd.t <= 2;
  g.genus_bidegree = *g.d1_genus_bidegree;
  g.genus_formula = *g.d1_genus_formula;
  g.hyperelliptic = *g.d1_hyperelliptic;
  return g;
}

GenusX genus_X(long k, long l, const SmoothnessCertificate& cert) {
  GenusY gy = genus_Y(k, l, cert);
  GenusX gx;
  if (k != l) {
    OddPointCount a = odd_point_count(k, l);
    if (a.oracle % 2 != 0) throw std::logic_error("odd number of ramification points");
    gx.odd_points = a.oracle;
    gx.genus_rh = 2 * gy.genus_bidegree - 1 + a.oracle / 2;
    gx.genus_formula = genus_X_formula(k, l);
    return gx;
  }
  long n = std::labs(l / 2);
  OddPointCount a0 = odd_point_count(k, l, Component::D0);
  OddPointCount a1 = odd_point_count(k, l, Component::D1);
  if (a0.oracle % 2 != 0 || a1.oracle % 2 != 0) throw std::logic_error("odd number of ramification points");
  gx.odd_points = a0.oracle + a1.oracle;
  gx.x0_rh = 2 * *gy.d0_genus - 1 + a0.oracle / 2;
  gx.x0_formula = static_cast<int>(n - 1);
  gx.x1_rh = 2 * *gy.d1_genus_bidegree - 1 + a1.oracle / 2;
  gx.x1_formula = static_cast<int>(3 * n * n - 7 * n + 5);
  gx.genus_rh = *gx.x1_rh;
  gx.genus_formula = *gx.x1_formula;
  return gx;
}

}  // namespace bv
