#include "bridgevar/newton.hpp"

#include <algorithm>
#include <stdexcept>

#include "bridgevar/polyseq.hpp"
#include "bridgevar/polytext.hpp"
#include "bridgevar/roots.hpp"

namespace bv {

namespace {

void require_prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) throw std::invalid_argument("p must be prime");
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

long ipow(long b, int e) {
  long out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

}  // namespace

std::string to_string(const ValueOrInf& v) { return v.infinite ? "inf" : to_string(v.value); }

long vp(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  mpz_class m = abs(n);
  long e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

ValueOrInf val_rat(const mpq_class& x, const mpz_class& p) {
  require_prime(p);
  if (x == 0) return ValueOrInf::inf();
  return ValueOrInf::of(mpq_class(vp(x.get_num(), p) - vp(x.get_den(), p)));
}

std::string to_string(const QuadElem& x) {
  std::string w = x.ring == QuadRing::GaussInt ? "i" : "sqrt3";
  return to_string(x.a) + (x.b < 0 ? "-" : "+") + to_string(mpz_class(abs(x.b))) + "*" + w;
}

ValueOrInf val_quad(const QuadElem& x, QuadRing ring, const mpz_class& p) {
  if (p != 3 || x.ring != ring) throw std::invalid_argument("unsupported valuation");
  if (x.is_zero()) return ValueOrInf::inf();
  return ValueOrInf::of(mpq_class(vp(x.norm(), 3), 2));
}

NewtonPolygon polygon(const std::vector<ValueOrInf>& values) {
  NewtonPolygon np;
  for (size_t i = 0; i < values.size(); ++i) np.points.push_back({static_cast<int>(i), values[i]});
  std::vector<PolyPoint> finite;
  for (const auto& pt : np.points)
    if (!pt.value.infinite) finite.push_back(pt);
  if (finite.empty()) throw std::invalid_argument("Newton polygon of the zero polynomial");

  np.vertical_length = finite.front().index;
  if (np.vertical_length > 0) np.vertices.push_back({0, ValueOrInf::inf()});

  // Monotone chain for the lower hull; collinear points are dropped.
  std::vector<PolyPoint> hull;
  auto cross = [](const PolyPoint& o, const PolyPoint& a, const PolyPoint& b) -> mpq_class {
    return (a.index - o.index) * (b.value.value - o.value.value) - (a.value.value - o.value.value) * (b.index - o.index);
  };
  for (const auto& pt : finite) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  np.vertices.insert(np.vertices.end(), hull.begin(), hull.end());
  for (size_t i = 1; i < hull.size(); ++i)
    np.slopes.push_back((hull[i].value.value - hull[i - 1].value.value) / (hull[i].index - hull[i - 1].index));
  return np;
}

std::vector<RootValuation> root_valuations(const NewtonPolygon& np) {
  std::vector<RootValuation> out;
  if (np.vertical_length > 0) out.push_back({ValueOrInf::inf(), np.vertical_length});
  size_t first = np.vertical_length > 0 ? 1 : 0;
  for (size_t i = 0; i < np.slopes.size(); ++i) {
    int len = np.vertices[first + i + 1].index - np.vertices[first + i].index;
    out.push_back({ValueOrInf::of(-np.slopes[i]), len});
  }
  return out;
}

NewtonPolygon polygon_at(const UniPoly& f, const mpz_class& p) {
  std::vector<ValueOrInf> vals;
  for (const auto& c : f.coeffs()) vals.push_back(val_rat(mpq_class(c), p));
  return polygon(vals);
}

std::vector<QuadElem> shifted_coefficients(const QuadElem& alpha, long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const long N = 4 * n;
  std::vector<QuadElem> pw(N + 1, QuadElem{1, 0, alpha.ring});
  for (long i = 1; i <= N; ++i) pw[i] = pw[i - 1] * alpha;
  const mpz_class two_n = 2 * n;
  std::vector<QuadElem> b(N + 1, QuadElem{0, 0, alpha.ring});
  for (long i = 0; i <= N; ++i) {
    b[i] = binomial(N, i) * pw[N - i];
    if (i <= 2 * n + 1) b[i] = b[i] + (two_n * binomial(2 * n + 1, i)) * pw[2 * n + 1 - i];
    if (i <= 2 * n - 1) b[i] = b[i] - (two_n * binomial(2 * n - 1, i)) * pw[2 * n - 1 - i];
  }
  b[0].a -= 1;
  return b;
}

ShiftedPolygon shifted_polygon(ShiftBase variant, long n, long p) {
  ShiftedPolygon lp;
  lp.variant = variant;
  lp.n = n;
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<PolyPoint>& ex = lp.expected_vertices;
  auto finish = [&](long last) {
    if (ex.empty() || ex.back().index != last) ex.push_back({static_cast<int>(last), ValueOrInf::of(0)});
  };

  if (variant == ShiftBase::One) {
    require_prime(p);
    lp.p = p;
    lp.e = static_cast<int>(vp(4 * n, p));
    for (const auto& c : shifted_coefficients(QuadElem::of(1, 0, QuadRing::GaussInt), n))
      lp.values.push_back(val_rat(mpq_class(c.a), p));
    ex.push_back({0, ValueOrInf::inf()});
    if (p != 2) {
      for (int j = 0; j <= lp.e; ++j) ex.push_back({static_cast<int>(ipow(p, j)), ValueOrInf::of(lp.e - j)});
    } else {
      ex.push_back({1, ValueOrInf::of(lp.e + 1)});
      for (int j = 2; j <= lp.e; ++j) ex.push_back({static_cast<int>(ipow(2, j)), ValueOrInf::of(lp.e - j)});
    }
    finish(4 * n);
  } else {
    if (n % 3 != 0) throw std::invalid_argument("n must be a positive multiple of 3");
    lp.p = 3;
    lp.e = static_cast<int>(vp(n, 3));
    QuadRing ring = variant == ShiftBase::I ? QuadRing::GaussInt : QuadRing::RootThree;
    QuadElem alpha = variant == ShiftBase::I ? QuadElem::of(0, 1, ring) : QuadElem::of(-2, 1, ring);
    for (const auto& c : shifted_coefficients(alpha, n)) lp.values.push_back(val_quad(c, ring));
    if (variant == ShiftBase::Alpha) {
      ex.push_back({0, ValueOrInf::of(mpq_class(2 * lp.e + 3, 2))});
      ex.push_back({1, ValueOrInf::of(lp.e)});
    } else {
      ex.push_back({0, ValueOrInf::of(lp.e)});
    }
    for (int j = 1; j <= lp.e; ++j) ex.push_back({static_cast<int>(ipow(3, j)), ValueOrInf::of(lp.e - j)});
    finish(4 * n);
  }
  lp.polygon = polygon(lp.values);
  return lp;
}

BinomCheck binom_check(long n, long p, long j_min, long j_max) {
  BinomCheck bc;
  require_prime(p);
  if (n < 1 || n % p != 0) throw std::invalid_argument("binom_check needs p | n and n >= 1");
  bc.e = static_cast<int>(vp(n, p));
  for (long j = j_min; j <= j_max; ++j) {
    mpz_class pj;
    mpz_ui_pow_ui(pj.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(j));
    if (pj > n) {
      bc.skipped_j.push_back(j);
      continue;
    }
    long pjl = pj.get_si();
    if (j > bc.e) {
      // only the bound holds here; C(n, p^j) may still be divisible by p
      bc.integral_j.push_back(j);
      for (long k = 1; k <= pjl; ++k) {
        ++bc.checked;
        if (binomial(n, k) == 0) {
          bc.pass = false;
          bc.detail = "C(n," + std::to_string(k) + ") vanished";
          return bc;
        }
      }
      continue;
    }
    long expect = std::max<long>(bc.e - j, 0);
    long got = vp(binomial(n, pjl), p);
    ++bc.checked;
    if (got != expect) {
      bc.pass = false;
      bc.detail = "v_p(C(n,p^" + std::to_string(j) + ")) = " + std::to_string(got);
      return bc;
    }
    for (long k = 1; k < pjl; ++k) {
      ++bc.checked;
      if (vp(binomial(n, k), p) <= bc.e - j) {
        bc.pass = false;
        bc.detail = "v_p(C(n," + std::to_string(k) + ")) too small for j = " + std::to_string(j);
        return bc;
      }
    }
  }
  return bc;
}

ComplexAbsCheck complexabs_check(long n_min, long n_max, double margin) {
  ComplexAbsCheck out;
  for (long n = n_min; n <= n_max; ++n) {
    if (n == 0) continue;
    ComplexAbsEntry e;
    e.n = n;
    UniPoly G = big_g(n);
    if (G.degree() >= 1) {
      auto roots = complex_roots(G);
      e.roots = static_cast<int>(roots.size());
      const UniPoly num = g_poly(n + 1), den = g_poly(n);
      e.min_abs = 1e300;
      e.max_abs = 0;
      for (const auto& w : roots) {
        double v = abs_eval(num, w) / abs_eval(den, w);
        e.min_abs = std::min(e.min_abs, v);
        e.max_abs = std::max(e.max_abs, v);
      }
      e.pass = n > 0 ? e.min_abs > 1 + margin : e.max_abs < 1 - margin;
    }
    out.pass = out.pass && e.pass;
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace bv
