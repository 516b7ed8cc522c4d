#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bridgevar/algebra.hpp"
#include "bridgevar/factor.hpp"
#include "bridgevar/polyseq.hpp"
#include "bridgevar/polytext.hpp"
#include "bridgevar/roots.hpp"

using namespace bv;

namespace {

UniPoly P(const char* s) { return parse_unipoly(s); }

UniPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<mpz_class> c(deg + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return UniPoly(std::move(c), Var::u);
}

// Sylvester determinant by fraction-free elimination.
mpz_class sylvester_det(const UniPoly& f, const UniPoly& g) {
  int m = f.degree(), n = g.degree();
  int N = m + n;
  std::vector<std::vector<mpz_class>> a(N, std::vector<mpz_class>(N));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeffs()[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeffs()[n - j];
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < N; ++k) {
    int piv = k;
    while (piv < N && a[piv][k] == 0) ++piv;
    if (piv == N) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[N - 1][N - 1];
}

}  // namespace

TEST_CASE("text format round trip") {
  CHECK(to_string(P("u^2-2*u+2")) == "u^2-2*u+2");
  CHECK(to_string(P("-(u-1)^2")) == "-u^2+2*u-1");
  CHECK(P("0").is_zero());
  CHECK(P("0").degree() == kNegInfDegree);
  BiPoly b = parse_bipoly("r^2*t-3*r+t^2+1", Var::t, Var::r);
  CHECK(to_string(b) == "t^2+t*r^2-3*r+1");
  CHECK(parse_bipoly(to_string(b), Var::t, Var::r) == b);
  CHECK_THROWS_AS(parse_unipoly("u+r"), std::invalid_argument);
  CHECK_THROWS_AS(parse_unipoly("u+q"), std::invalid_argument);
}

TEST_CASE("gcd") {
  CHECK(poly_gcd(P("u^2-1"), P("u-1")) == P("u-1"));
  CHECK(poly_gcd(f_poly(5), f_poly(4)) == P("1"));
  CHECK(poly_gcd(P("0"), P("4*u+6")) == P("2*u+3"));
  CHECK(poly_gcd(P("0"), P("0")).is_zero());
  CHECK(poly_gcd(P("-6*u^2+6"), P("3*u+3")) == P("u+1"));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    UniPoly h = random_poly(rng, 3);
    UniPoly a = random_poly(rng, 5) * h, b = random_poly(rng, 4) * h;
    UniPoly g = poly_gcd(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(primitive_part(h), g));
  }
}

TEST_CASE("resultant") {
  BiPoly f = parse_bipoly("r-t", Var::t, Var::r);
  BiPoly g = parse_bipoly("r+t", Var::t, Var::r);
  // Sylvester convention gives -2r; the sign depends on argument order.
  CHECK(resultant(f, g, Var::t) == parse_unipoly("-2*r"));
  CHECK(resultant(g, f, Var::t) == parse_unipoly("2*r"));
  CHECK(resultant(parse_bipoly("r^2+1", Var::t, Var::r), parse_bipoly("r", Var::t, Var::r), Var::t) ==
        parse_unipoly("1", Var::r));
  CHECK_THROWS_AS(resultant(P("0"), P("0")), std::domain_error);
  CHECK(resultant(P("u^2-1"), P("3")) == 9);
  CHECK(resultant(P("3"), P("u^2-1")) == 9);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    UniPoly a = random_poly(rng, 1 + i % 12), b = random_poly(rng, 1 + (i * 7) % 12);
    CHECK(resultant(a, b) == sylvester_det(a, b));
  }
  for (int i = 0; i < 20; ++i) {
    UniPoly a = random_poly(rng, 1 + i % 6), b = random_poly(rng, 1 + (i * 5) % 6), h = random_poly(rng, 1 + i % 5);
    CHECK(resultant(a * b, h) == resultant(a, h) * resultant(b, h));
  }
}

TEST_CASE("bivariate resultant agrees with specialization") {
  BiPoly F = parse_bipoly("t^3*r-2*t^2+r^2*t-r+5", Var::t, Var::r);
  BiPoly G = parse_bipoly("t^2-r*t+3*r^3-1", Var::t, Var::r);
  UniPoly R = resultant(F, G, Var::t);
  auto to_z = [](const QPoly& q) {
    std::vector<mpz_class> c;
    for (const auto& x : q.coeffs()) c.push_back(x.get_num());
    return UniPoly(std::move(c), Var::t);
  };
  for (int r0 = -4; r0 <= 4; ++r0) {
    // leading coefficients in t are r and 1, so degrees drop only at r=0
    if (r0 == 0) continue;
    UniPoly fi = to_z(eval_inner(F, r0)), gi = to_z(eval_inner(G, r0));
    CHECK(eval<mpz_class>(R, mpz_class(r0)) == resultant(fi, gi));
  }
}

TEST_CASE("squarefree") {
  CHECK(is_separable(f_poly(6)));
  CHECK(squarefree_part(P("(u-1)^2")) == P("u-1"));
  CHECK_FALSE(is_separable(P("(u-1)^2")));
  CHECK(is_separable(g_poly(4) * g_poly(5)));
  CHECK_THROWS_AS(squarefree_part(P("0")), std::domain_error);
  CHECK(squarefree_part(P("(u-1)^3*(u+2)^2*u")) == P("(u-1)*(u+2)*u"));
}

TEST_CASE("degree patterns mod p") {
  CHECK(*modp_degree_pattern(P("u^2+1"), 3) == std::vector<int>{2});
  CHECK(*modp_degree_pattern(P("u^2-1"), 5) == std::vector<int>{1, 1});
  CHECK_FALSE(modp_degree_pattern(P("u^2+1"), 2).has_value());
  CHECK_FALSE(modp_degree_pattern(P("5*u^2+1"), 5).has_value());
  CHECK_THROWS_AS(modp_degree_pattern(P("u^2+1"), 9), std::invalid_argument);
  // (u^2+u+1)(u^3+u+1) over F_2: both irreducible
  CHECK(*modp_degree_pattern(P("(u^2+u+1)*(u^3+u+1)"), 2) == std::vector<int>{2, 3});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    UniPoly f = random_poly(rng, 2 + i % 9);
    for (std::uint64_t p : {7ULL, 101ULL, 1000003ULL}) {
      auto pat = modp_degree_pattern(f, p);
      if (!pat) continue;
      int s = 0;
      for (int d : *pat) s += d;
      CHECK(s == f.degree());
    }
  }
}

TEST_CASE("irreducibility") {
  auto v = irreducibility_analysis(P("u^2-2"));
  CHECK(std::holds_alternative<Irreducible>(v));
  auto w = irreducibility_analysis(P("u^2-1"));
  REQUIRE(std::holds_alternative<Reducible>(w));
  CHECK(std::get<Reducible>(w).factor_degree == 1);
  // product of two irreducible quadratics: always Inconclusive with {2}
  auto x = irreducibility_analysis(P("(u^2+1)*(u^2-2)"));
  REQUIRE(std::holds_alternative<Inconclusive>(x));
  CHECK(std::get<Inconclusive>(x).possible_degrees == std::vector<int>{2});
  CHECK(std::holds_alternative<Irreducible>(irreducibility_analysis(P("u^5-u-1"))));
  CHECK_THROWS(irreducibility_analysis(P("3")));
}

TEST_CASE("rational roots") {
  auto r = rational_roots(g_poly(2) - g_poly(1));
  REQUIRE(r.size() == 1);
  CHECK(r[0].value == 2);
  auto s = rational_roots(f_poly(3));
  REQUIRE(s.size() == 2);
  CHECK(s[0].value == -1);
  CHECK(s[1].value == 1);
  CHECK(rational_roots(P("u^2-2*u+2")).empty());
  auto t = rational_roots(P("(2*u-3)^2*(5*u+1)*u^3"));
  REQUIRE(t.size() == 3);
  CHECK(t[0].value == mpq_class(-1, 5));
  CHECK(t[1].value == 0);
  CHECK(t[1].multiplicity == 3);
  CHECK(t[2].value == mpq_class(3, 2));
  CHECK(t[2].multiplicity == 2);
}

TEST_CASE("complex roots") {
  auto z = complex_roots(P("u^2-2*u+2"));
  REQUIRE(z.size() == 2);
  CHECK(std::abs(z[0] - std::complex<double>(1, -1)) < 1e-12);
  CHECK(std::abs(z[1] - std::complex<double>(1, 1)) < 1e-12);
  auto w = complex_roots(P("u^2-1"));
  CHECK(std::abs(w[0] + 1.0) < 1e-12);
  CHECK(std::abs(w[1] - 1.0) < 1e-12);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    UniPoly f = squarefree_part(random_poly(rng, 3 + i % 10));
    if (f.degree() < 1) continue;
    auto roots = complex_roots(f);
    // rebuild lead * prod (x - z)
    std::vector<std::complex<double>> c{std::complex<double>(f.lead().get_d())};
    for (auto r : roots) {
      std::vector<std::complex<double>> n(c.size() + 1);
      for (size_t k = 0; k < c.size(); ++k) {
        n[k + 1] += c[k];
        n[k] -= r * c[k];
      }
      c = n;
    }
    double norm = height(f).get_d();
    for (int k = 0; k <= f.degree(); ++k) CHECK(std::abs(c[k] - f.coeffs()[k].get_d()) < 1e-9 * norm);
  }
}

TEST_CASE("rational function") {
  RatPoly h(g_poly(3), g_poly(2));
  CHECK(h.denominator() == g_poly(2));
  RatPoly q(P("u^2-1"), P("2*u-2"));
  CHECK(q.numerator() == P("u+1"));
  CHECK(q.denominator() == P("2"));
  CHECK(*q.eval(3) == 2);
  CHECK_FALSE(RatPoly(P("1"), P("u")).eval(0).has_value());
}
