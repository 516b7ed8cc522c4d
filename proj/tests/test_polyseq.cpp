#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridgevar/polyseq.hpp"
#include "bridgevar/polytext.hpp"

using namespace bv;

TEST_CASE("sequence values") {
  CHECK(f_poly(2) == parse_unipoly("u"));
  CHECK(f_poly(-3) == parse_unipoly("-(u^2-1)"));
  CHECK(eval<mpz_class>(f_poly(5), mpz_class(2)) == 5);
  CHECK(phi(4) == parse_unipoly("u"));
  CHECK(psi(6) == parse_unipoly("u-2") * f_poly(3));
  CHECK(phi(-5) == phi(5));
  CHECK(phi(-4) == -phi(4));
  CHECK(psi(0).is_zero());
  CHECK(big_g(2) == parse_unipoly("u^2-2*u+2"));
  for (long n = -6; n <= 6; ++n) CHECK(eval<mpz_class>(big_g(n), mpz_class(2)) == n);
  CHECK(eval<mpz_class>(big_g(3), mpz_class(-2)) == 35);
  CHECK(f_poly(3, Var::r).var() == Var::r);
}

TEST_CASE("g expansions") {
  CHECK(g_poly(2) == parse_unipoly("u-1"));
  CHECK(g_poly(3) == parse_unipoly("u^2-u-1"));
  CHECK(g_poly(1) == parse_unipoly("1"));
  CHECK(g_poly(0) == parse_unipoly("1"));
}

TEST_CASE("start identity at n=1") {
  UniPoly u = UniPoly::gen(Var::u);
  UniPoly lhs = g_poly(2) * g_poly(2) + g_poly(1) * g_poly(1) - u * g_poly(1) * g_poly(2);
  CHECK(lhs == parse_unipoly("2-u"));
}

TEST_CASE("identity suite") {
  for (const auto& r : identity_suite(20)) {
    INFO(r.name);
    CHECK(r.pass);
    CHECK(r.checked == 41);
  }
}

TEST_CASE("wider degree and value checks") {
  for (long j = -40; j <= 40; ++j) {
    if (j != 0) CHECK(f_poly(j).degree() == std::abs(j) - 1);
    CHECK(g_poly(j).degree() == (j > 0 ? j - 1 : -j));
    CHECK(eval<mpz_class>(f_poly(j), mpz_class(2)) == j);
    CHECK(eval<mpz_class>(g_poly(j), mpz_class(2)) == 1);
  }
}
