#include "bridgevar/models.hpp"

#include <stdexcept>

#include "bridgevar/algebra.hpp"
#include "bridgevar/polyseq.hpp"
#include "bridgevar/polytext.hpp"
#include "bridgevar/riley.hpp"

namespace bv {

namespace {

void require_even(long l) {
  if (l % 2 != 0) throw std::invalid_argument("l must be even (swap k and l first)");
}

BiPoly retag(const BiPoly& f, Var outer, Var inner) {
  std::vector<UniPoly> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.with_var(inner));
  return BiPoly(std::move(out), outer);
}

// Reduce every coefficient in the inner variable modulo m (over Q).
std::vector<QPoly> reduce_inner(const BiPoly& f, const QPoly& m) {
  std::vector<QPoly> out;
  for (const auto& c : f.coeffs()) out.push_back(rem(to_q(c), m));
  return out;
}

}  // namespace

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::C: return "C";
    case ModelKind::X: return "X";
    case ModelKind::D: return "D";
    case ModelKind::D0: return "D0";
    case ModelKind::D1: return "D1";
  }
  return "?";
}

std::string to_string(ModelState s) {
  switch (s) {
    case ModelState::Curve: return "Curve";
    case ModelState::Empty: return "Empty";
    case ModelState::FullPlane: return "FullPlane";
    case ModelState::LineUnion: return "LineUnion";
  }
  return "?";
}

BiPoly normalized_equation(const BiPoly& f, Var outer, Var inner) { return retag(normalize_unit(f), outer, inner); }

Bidegree bidegree_of(const BiPoly& f) {
  if (f.is_zero()) return {0, 0};
  return {inner_degree(f), f.degree()};
}

std::optional<Bidegree> expected_d_bidegree(long k, long l) {
  require_even(l);
  long n = l / 2;
  if (k == 0 && n == 0) return std::nullopt;
  if (k == 1 || k == -1) {
    long kn = k * n;
    if (kn > 0) return Bidegree{0, static_cast<int>(kn - 1)};
    return Bidegree{0, static_cast<int>(-kn)};
  }
  return Bidegree{static_cast<int>(std::labs(k) / 2), static_cast<int>(std::labs(n))};
}

CurveModel c_model(long k, long l) {
  require_even(l);
  CurveModel m;
  m.kind = ModelKind::C;
  m.k = k;
  m.l = l;
  m.first = Var::r;
  m.second = Var::y;
  // The sign convention here is the negative of the generator F_{k,n}.
  BiPoly f = -riley_poly_J(k, l / 2);
  m.equation = normalized_equation(f, Var::y, Var::r);
  m.bidegree = bidegree_of(m.equation);
  if (k * l == 0 || (m.equation.degree() <= 0 && inner_degree(m.equation) <= 0)) m.state = ModelState::Empty;
  return m;
}

CurveModel x_model(long k, long l) {
  CurveModel c = c_model(k, l);
  CurveModel m = c;
  m.kind = ModelKind::X;
  m.second = Var::x;
  const BiPoly x2 = parse_bipoly("x^2-2", Var::x, Var::r);
  BiPoly acc(Var::x);
  for (int i = c.equation.degree(); i >= 0; --i) {
    acc = acc * x2;
    acc += BiPoly(c.equation.coeffs()[i], Var::x);
  }
  m.equation = normalized_equation(acc, Var::x, Var::r);
  m.bidegree = bidegree_of(m.equation);
  return m;
}

CurveModel d_model(long k, long l) {
  require_even(l);
  CurveModel m;
  m.kind = ModelKind::D;
  m.k = k;
  m.l = l;
  m.first = Var::r;
  m.second = Var::t;
  BiPoly main = lift_inner(phi(k + 1, Var::r), Var::t) * lift_outer(phi(l - 1, Var::t), Var::r) -
                lift_inner(phi(k - 1, Var::r), Var::t) * lift_outer(phi(l + 1, Var::t), Var::r);
  BiPoly alt = lift_inner(psi(k, Var::r), Var::t) * lift_outer(phi(l - 1, Var::t), Var::r) -
               lift_inner(phi(k - 1, Var::r), Var::t) * lift_outer(psi(l, Var::t), Var::r);
  if (main != alt) throw std::logic_error("D-model equations disagree");
  m.equation = main.is_zero() ? main : normalized_equation(main, Var::t, Var::r);
  m.bidegree = bidegree_of(m.equation);

  auto expect = expected_d_bidegree(k, l);
  if (!expect) {
    if (!m.equation.is_zero()) throw std::logic_error("D(0,0) should vanish identically");
    m.state = ModelState::FullPlane;
    return m;
  }
  if (!(*expect == m.bidegree) && !(m.bidegree == Bidegree{0, 0} && *expect == Bidegree{0, 0}))
    throw std::logic_error("D-model bidegree does not match the expected bidegree");
  if (m.bidegree.r == 0 && m.bidegree.t == 0) m.state = ModelState::Empty;
  else if (m.bidegree.r == 0 || m.bidegree.t == 0) m.state = ModelState::LineUnion;
  else if (k == l && (k == 2 || k == -2)) m.state = ModelState::LineUnion;
  return m;
}

DSplit d_split(long l) {
  require_even(l);
  if (l == 0) throw std::invalid_argument("d_split requires l != 0");
  CurveModel d = d_model(l, l);
  const BiPoly line = parse_bipoly("t-r", Var::t, Var::r);
  BiPoly q;
  try {
    q = exact_quotient(d.equation, line);
  } catch (const std::domain_error&) {
    throw std::logic_error("D(l,l) is not divisible by t - r");
  }
  DSplit s;
  s.d0 = d;
  s.d0.kind = ModelKind::D0;
  s.d0.equation = line;
  s.d0.bidegree = {1, 1};
  s.d0.state = ModelState::Curve;
  s.d1 = d;
  s.d1.kind = ModelKind::D1;
  s.d1.equation = normalized_equation(q, Var::t, Var::r);
  s.d1.bidegree = bidegree_of(s.d1.equation);
  int e = static_cast<int>(std::labs(l / 2)) - 1;
  if (!(s.d1.bidegree == Bidegree{e, e})) throw std::logic_error("D1 bidegree mismatch");
  s.d1.state = e == 0 ? ModelState::Empty : ModelState::Curve;
  return s;
}

Point sigma_push(long k, long /*l*/, const Point& ry) {
  mpq_class pp = eval_q(phi(-k, Var::r), ry.first) * eval_q(psi(k, Var::r), ry.first);
  return {ry.first, pp * (ry.second - ry.first) + 2};
}

Point sigma_pull(long k, long /*l*/, const Point& rt) {
  mpq_class pp = eval_q(phi(-k, Var::r), rt.first) * eval_q(psi(k, Var::r), rt.first);
  if (sgn(pp) == 0) throw IndeterminateLocus();
  return {rt.first, rt.first + (rt.second - 2) / pp};
}

SpecialPointsReport special_points_check(long k, long l) {
  require_even(l);
  if (k * l == 0) throw std::invalid_argument("special points need kl != 0");
  SpecialPointsReport rep;
  auto fail = [&](const std::string& why) {
    rep.pass = false;
    if (rep.detail.empty()) rep.detail = why;
  };

  // Part (i): points of C(k,l) above the roots of Psi_k.
  const BiPoly C = c_model(k, l).equation;
  UniPoly P = squarefree_part(psi(k, Var::r));
  const UniPoly r_minus_2 = parse_unipoly("r-2");
  if (k % 2 == 0) {
    if (!divides(r_minus_2, P)) fail("Psi_k(2) != 0 for even k");
    P = exact_quotient(P, r_minus_2);
    QPoly at2 = eval_inner(C, 2);
    if (at2.degree() != 1) {
      fail("C(2, y) is not linear");
    } else {
      mpq_class y0 = -at2.coeffs()[0] / at2.coeffs()[1];
      rep.c_point = Point{2, y0};
      mpq_class shift(4, k * l);
      shift.canonicalize();
      if (y0 != 2 - shift) fail("special point off 2 - 4/(kl)");
    }
  }
  if (P.degree() > 0) {
    // Over the remaining roots of Psi_k, C(r0, y) must be a nonzero constant.
    auto red = reduce_inner(C, to_q(P));
    for (size_t i = 1; i < red.size(); ++i)
      if (!red[i].is_zero()) fail("C has points over a root of Psi_k other than r=2");
    UniPoly c0 = red.empty() || red[0].is_zero() ? UniPoly(Var::r) : clear_denominators(red[0]);
    if (poly_gcd(c0, P).degree() > 0)
      fail("C vanishes identically over a root of Psi_k");
  }

  // Part (ii): on D, Psi_k(r0) = 0 forces Psi_l(t0) = 0 and conversely.
  const BiPoly Draw = lift_inner(psi(k, Var::r), Var::t) * lift_outer(phi(l - 1, Var::t), Var::r) -
                      lift_inner(phi(k - 1, Var::r), Var::t) * lift_outer(psi(l, Var::t), Var::r);
  auto check_side = [&](const BiPoly& F, long a, long b, int sign) {
    // modulo Psi_a(first), F is sign * Phi_{a-1}(first) Psi_b(second) with Phi_{a-1} a unit
    UniPoly Pa = squarefree_part(psi(a, Var::r));
    if (Pa.degree() <= 0) return;
    if (poly_gcd(Pa, phi(a - 1, Var::r)).degree() != 0) {
      rep.d_roots_consistent = false;
      fail("Phi_{k-1} shares a root with Psi_k");
    }
    BiPoly expect = lift_inner(phi(a - 1, Var::r), Var::t) * lift_outer(psi(b, Var::t), Var::r);
    if (sign < 0) expect = -expect;
    auto lhs = reduce_inner(F, to_q(Pa));
    auto rhs = reduce_inner(expect, to_q(Pa));
    lhs.resize(std::max(lhs.size(), rhs.size()), QPoly(Var::r));
    rhs.resize(lhs.size(), QPoly(Var::r));
    if (lhs != rhs) {
      rep.d_roots_consistent = false;
      fail("D modulo Psi_k is not a unit multiple of Psi_l");
    }
  };
  check_side(Draw, k, l, -1);
  check_side(retag(swap_vars(Draw), Var::t, Var::r), l, k, 1);
  return rep;
}

}  // namespace bv
