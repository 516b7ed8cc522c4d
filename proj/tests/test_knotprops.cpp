#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "bridgevar/algebra.hpp"
#include "bridgevar/knotprops.hpp"
#include "bridgevar/polytext.hpp"

using namespace bv;

namespace {

// Alexander polynomial of K(p,q) from the signs e_i = (-1)^floor(iq/p).
UniPoly alexander_from_pq(long p, long q) {
  std::map<long, long> terms;
  long expo = 0;
  terms[0] += 1;
  for (long i = 1; i < p; ++i) {
    long fl = (i * q >= 0) ? (i * q) / p : -((-i * q + p - 1) / p);
    expo += (fl % 2 == 0) ? 1 : -1;
    terms[expo] += (i % 2 == 0) ? 1 : -1;
  }
  long low = terms.begin()->first;
  std::vector<mpz_class> c(terms.rbegin()->first - low + 1);
  for (auto [e, v] : terms) c[e - low] = v;
  UniPoly out(std::move(c), Var::t);
  int shift = 0;
  while (out.coeffs()[shift] == 0) ++shift;
  return UniPoly(std::vector<mpz_class>(out.coeffs().begin() + shift, out.coeffs().end()), Var::t);
}

long brute_q(long k, long l) {
  long p = std::labs(1 - k * l);
  for (long q = -p + 1; q <= p; ++q) {
    if (q % 2 == 0) continue;
    long lhs = q * (1 - k * l) - l * p;  // q/p == l/(1-kl) mod 1
    if ((lhs % (p * (1 - k * l))) == 0) return q;
  }
  return 0;
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify(2, -2) == KnotClass::Hyperbolic);
  CHECK(classify(2, 2) == KnotClass::Trefoil);
  CHECK(classify(-2, -2) == KnotClass::Trefoil);
  CHECK(classify(3, 3) == KnotClass::NotAKnot);
  CHECK(classify(0, 5) == KnotClass::Unknot);
  CHECK(classify(1, 6) == KnotClass::TorusNonHyperbolic);
  CHECK(classify(4, -1) == KnotClass::TorusNonHyperbolic);
  CHECK(classify(-2, 2) == KnotClass::Hyperbolic);
}

TEST_CASE("normalization swaps to even l") {
  KnotId id = normalize(3, 4);
  CHECK(!id.swapped);
  KnotId sw = normalize(4, 3);
  CHECK(sw.swapped);
  CHECK(sw.k == 3);
  CHECK(sw.l == 4);
  CHECK(sw.trace.size() == 1);
  CHECK_THROWS_AS(normalize(3, 5), std::invalid_argument);
}

TEST_CASE("two-bridge normal forms") {
  auto f = two_bridge_params(2, -2);
  CHECK(f.p == 5);
  CHECK(f.q == 3);
  CHECK(f.cont_frac == std::vector<long>{1, 1, 2});
  auto t = two_bridge_params(2, 2);
  CHECK(t.p == 3);
  CHECK(t.q == 1);
  CHECK(two_bridge_params(3, 4).cont_frac == std::vector<long>{1, 1, 1, 2, 1});
  CHECK_THROWS_WITH_AS(two_bridge_params(0, 4), "unknot has no normal form", std::invalid_argument);

  for (long k = -9; k <= 9; ++k)
    for (long l = -9; l <= 9; ++l) {
      if (k * l == 0 || (k * l) % 2 != 0) continue;
      auto g = two_bridge_params(k, l);
      CHECK(g.p == std::labs(1 - k * l));
      CHECK(g.p % 2 == 1);
      CHECK(std::labs(g.q) % 2 == 1);
      CHECK_MESSAGE(g.q == brute_q(k, l), k << "," << l);
      CHECK(g.cont_frac.size() % 2 == 1);
      CHECK(std::all_of(g.cont_frac.begin(), g.cont_frac.end(), [](long a) { return a >= 1; }));
      mpq_class x(g.q + g.epsilon * g.p, g.p);
      x.canonicalize();
      CHECK(cont_frac_value(g.cont_frac) == x);
      if (k != l) {
        auto h = two_bridge_params(l, k);
        CHECK(h.p == g.p);
        CHECK(((g.q * h.q - 1) % g.p + g.p) % g.p == 0);
        std::vector<long> rev(g.cont_frac.rbegin(), g.cont_frac.rend());
        CHECK_MESSAGE(h.cont_frac == rev, k << "," << l);
      } else {
        CHECK(((g.q * g.q - 1) % g.p + g.p) % g.p == 0);
      }
    }
  auto a = two_bridge_params(4, 6), b = two_bridge_params(6, 4);
  CHECK(a.p == b.p);
  CHECK((a.q * b.q - 1) % a.p == 0);
}

TEST_CASE("four-plat table") {
  CHECK(fourplat_sequence(3, 4) == std::vector<long>{1, 1, 1, 2, 1});
  CHECK(fourplat_sequence(3, -4) == std::vector<long>{1, 2, 4});
  CHECK(fourplat_sequence(-4, -6) == std::vector<long>{3, 1, 5});
  CHECK_THROWS_WITH_AS(fourplat_sequence(1, 4), "not covered by table", NotCoveredByTable);
  for (long k = -9; k <= 9; ++k)
    for (long l = -9; l <= 9; ++l) {
      if (k * l == 0 || (k * l) % 2 != 0) continue;
      std::vector<long> seq;
      try {
        seq = fourplat_sequence(k, l);
      } catch (const NotCoveredByTable&) {
        continue;
      }
      mpq_class x = cont_frac_value(seq);
      auto g = two_bridge_params(k, l);
      CHECK(x.get_den() == g.p);
      CHECK_MESSAGE(same_two_bridge_knot(g.p, g.q, g.p, x.get_num().get_si()), k << "," << l);
    }
}

TEST_CASE("alexander polynomials") {
  CHECK(alexander(2, -2) == parse_unipoly("-t^2+3*t-1", Var::t));
  CHECK(alexander(3, 4) == parse_unipoly("t^4-3*t^3+3*t^2-3*t+1", Var::t));
  CHECK(alexander(2, 2) == parse_unipoly("t^2-t+1", Var::t));
  CHECK(alexander(0, 4) == parse_unipoly("1", Var::t));
  CHECK_THROWS_AS(alexander(2, 3), std::invalid_argument);
  for (long k = -9; k <= 9; ++k)
    for (long l = -10; l <= 10; l += 2) {
      if (k * l == 0) continue;
      UniPoly a = alexander_canonical(k, l);
      // palindromic
      std::vector<mpz_class> rev(a.coeffs().rbegin(), a.coeffs().rend());
      CHECK(UniPoly(rev, Var::t) == a);
      auto f = two_bridge_params(k, l);
      CHECK_MESSAGE(equal_up_to_unit(a, alexander_from_pq(f.p, f.q)), k << "," << l);
      if (k % 2 == 0) CHECK(alexander_canonical(l, k) == a);
    }
}

TEST_CASE("fibered knots") {
  CHECK(is_fibered(2, -2));
  CHECK(!is_fibered(2, 4));
  CHECK(is_fibered(3, 6));
  CHECK(is_fibered(0, 7));
  CHECK(is_fibered(4, 3) == is_fibered(3, 4));
  for (long k = -10; k <= 10; ++k)
    for (long l = -10; l <= 10; ++l) {
      if ((k * l) % 2 != 0) continue;
      CHECK_MESSAGE(is_fibered(k, l) == in_fibered_list(k, l), k << "," << l);
    }
}

TEST_CASE("trace field polynomials") {
  CHECK(trace_field_poly(2, -2).degree() == 2);
  CHECK(trace_field_poly(4, 6).degree() == 11);
  CHECK(trace_field_poly(4, 4, true).degree() == 3);
  CHECK(trace_field_poly(4, 4, false).degree() == 7);
  for (long k = -9; k <= 9; ++k)
    for (long l = -10; l <= 10; l += 2) {
      if (k * l == 0) continue;
      CHECK(trace_field_poly(k, l).degree() == trace_field_degree_formula(k, l, false));
      if (k == l) CHECK(trace_field_poly(k, l, true).degree() == std::labs(l) - 1);
    }
  auto r = trace_field_report(2, -2);
  CHECK(r.bound == 2);
  CHECK(r.poly_degree == 2);
  CHECK(std::holds_alternative<Irreducible>(r.verdict));
  CHECK(r.observation.rfind("empirical", 0) == 0);
  auto r26 = trace_field_report(2, 6);
  CHECK(r26.bound == 5);
  CHECK(r26.poly_degree == 5);
  CHECK(trace_field_report(4, 4).bound == 3);
  CHECK_THROWS_AS(trace_field_report(2, 2), Refusal);
}

TEST_CASE("commensurability certificates") {
  auto even = commensurability_certificate(2, 4);
  CHECK(even.verdict == CommVerdict::NotCommensurable);
  auto* w = std::get_if<EvenWitness>(&even.witness);
  REQUIRE(w);
  CHECK(w->point == Point{2, mpq_class(3, 2)});
  CHECK(w->prime == 2);
  CHECK(verify_certificate(even));

  auto odd = commensurability_certificate(3, -4);
  auto* o = std::get_if<OddWitness>(&odd.witness);
  REQUIRE(o);
  CHECK(abs(o->leading) == 2);
  CHECK(abs(o->constant) == 1);
  CHECK(o->prime == 2);
  CHECK(o->positive_slope > 0);
  CHECK(verify_certificate(odd));

  CHECK(commensurability_certificate(2, -2).verdict == CommVerdict::Fibered);
  CHECK_THROWS_AS(commensurability_certificate(2, 2), Refusal);
  CHECK_THROWS_AS(commensurability_certificate(1, 4), Refusal);

  for (long k = -10; k <= 10; ++k)
    for (long l = -10; l <= 10; ++l) {
      if ((k * l) % 2 != 0 || classify(k, l) != KnotClass::Hyperbolic) continue;
      auto c = commensurability_certificate(k, l);
      CHECK((c.verdict == CommVerdict::Fibered) == is_fibered(k, l));
      CHECK_MESSAGE(verify_certificate(c), k << "," << l);
    }
}
