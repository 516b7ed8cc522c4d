#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "bridgevar/newton.hpp"
#include "bridgevar/polytext.hpp"

using namespace bv;

namespace {

std::map<std::string, int> multiset(const std::vector<RootValuation>& rv) {
  std::map<std::string, int> out;
  for (const auto& r : rv) out[to_string(r.valuation)] += r.count;
  return out;
}

ValueOrInf V(long n, long d = 1) { return ValueOrInf::of(mpq_class(n, d)); }

}  // namespace

TEST_CASE("rational valuations") {
  CHECK(val_rat(12, 2) == V(2));
  CHECK(val_rat(mpq_class(3, 2), 2) == V(-1));
  CHECK(val_rat(0, 5).infinite);
  CHECK(val_rat(mpq_class(-50, 3), 5) == V(2));
  CHECK_THROWS_AS(val_rat(4, 6), std::invalid_argument);
}

TEST_CASE("quadratic valuations") {
  CHECK(val_quad(QuadElem::of(3, 0, QuadRing::GaussInt), QuadRing::GaussInt) == V(1));
  CHECK(val_quad(QuadElem::of(3, 0, QuadRing::RootThree), QuadRing::RootThree) == V(1));
  CHECK(val_quad(QuadElem::of(0, 1, QuadRing::RootThree), QuadRing::RootThree) == V(1, 2));
  CHECK(val_quad(QuadElem::of(0, 1, QuadRing::GaussInt), QuadRing::GaussInt) == V(0));
  CHECK(val_quad(QuadElem::of(0, 0, QuadRing::GaussInt), QuadRing::GaussInt).infinite);
  CHECK_THROWS_WITH_AS(val_quad(QuadElem::of(5, 0, QuadRing::GaussInt), QuadRing::GaussInt, 5),
                       "unsupported valuation", std::invalid_argument);

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> d(-60, 60);
  for (QuadRing ring : {QuadRing::GaussInt, QuadRing::RootThree}) {
    for (int i = 0; i < 10000; ++i) {
      QuadElem x = QuadElem::of(d(rng), d(rng), ring), y = QuadElem::of(d(rng), d(rng), ring);
      if (x.is_zero() || y.is_zero()) continue;
      ValueOrInf vx = val_quad(x, ring), vy = val_quad(y, ring);
      REQUIRE(val_quad(x * y, ring) == vx + vy);
      ValueOrInf vs = val_quad(x + y, ring);
      ValueOrInf lo = vx < vy ? vx : vy;
      REQUIRE(!(vs < lo));
      if (!(vx == vy)) REQUIRE(vs == lo);
    }
  }
}

TEST_CASE("polygon examples") {
  // (S+1)^4 + 2((S+1)^3 - (S+1)) - 1 = S^4 + 6S^3 + 12S^2 + 8S
  auto c = shifted_coefficients(QuadElem::of(1, 0, QuadRing::GaussInt), 1);
  std::vector<long> ints;
  for (const auto& q : c) ints.push_back(q.a.get_si());
  CHECK(ints == std::vector<long>{0, 8, 12, 6, 1});
  auto np = polygon_at(parse_unipoly("S^4+6*S^3+12*S^2+8*S", Var::S), 2);
  CHECK(np.vertices == std::vector<PolyPoint>{{0, ValueOrInf::inf()}, {1, V(3)}, {4, V(0)}});
  auto rv = root_valuations(np);
  REQUIRE(rv.size() == 2);
  CHECK(rv[0].valuation.infinite);
  CHECK(rv[0].count == 1);
  CHECK(rv[1].valuation == V(1));
  CHECK(rv[1].count == 3);

  auto sq = polygon_at(parse_unipoly("x^2-7", Var::x), 7);
  CHECK(sq.vertices == std::vector<PolyPoint>{{0, V(1)}, {2, V(0)}});
  CHECK(root_valuations(sq)[0].valuation == V(1, 2));
  CHECK(root_valuations(sq)[0].count == 2);

  CHECK_THROWS_AS(polygon({ValueOrInf::inf(), ValueOrInf::inf()}), std::invalid_argument);
}

TEST_CASE("polygon invariants and products") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coef(-40, 40);
  std::uniform_int_distribution<int> deg(1, 8);
  auto random_poly = [&]() {
    std::vector<mpz_class> c(deg(rng) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(c, Var::x);
  };
  for (long p : {2, 3, 5}) {
    for (int i = 0; i < 200; ++i) {
      UniPoly f = random_poly(), g = random_poly();
      if (f.is_zero() || g.is_zero()) continue;
      auto nf = polygon_at(f, p), ng = polygon_at(g, p), nfg = polygon_at(f * g, p);
      for (size_t s = 1; s < nfg.slopes.size(); ++s) CHECK(nfg.slopes[s - 1] < nfg.slopes[s]);
      int total = 0;
      for (const auto& r : root_valuations(nfg)) total += r.count;
      CHECK(total == (f * g).degree());
      // every point on or above the hull
      const auto& vs = nfg.vertices;
      for (const auto& pt : nfg.points) {
        if (pt.value.infinite) continue;
        for (size_t s = 0; s + 1 < vs.size(); ++s) {
          if (vs[s].value.infinite || pt.index < vs[s].index || pt.index > vs[s + 1].index) continue;
          mpq_class on = vs[s].value.value + (vs[s + 1].value.value - vs[s].value.value) *
                                                 mpq_class(pt.index - vs[s].index, vs[s + 1].index - vs[s].index);
          CHECK(pt.value.value >= on);
        }
      }
      auto mf = multiset(root_valuations(nf)), mg = multiset(root_valuations(ng));
      for (auto [k, v] : mg) mf[k] += v;
      CHECK(mf == multiset(root_valuations(nfg)));
    }
  }
}

TEST_CASE("polygons of the shifted polynomials") {
  auto one = shifted_polygon(ShiftBase::One, 1, 2);
  CHECK(one.e == 2);
  CHECK(one.polygon.vertices == std::vector<PolyPoint>{{0, ValueOrInf::inf()}, {1, V(3)}, {4, V(0)}});
  for (long p : {2, 3, 5})
    for (long n = 1; n <= 12; ++n) CHECK_MESSAGE(shifted_polygon(ShiftBase::One, n, p).matches(), n << " " << p);
  auto i3 = shifted_polygon(ShiftBase::I, 3);
  CHECK(i3.e == 1);
  CHECK(i3.polygon.vertices[0] == PolyPoint{0, V(1)});
  CHECK(i3.polygon.vertices[1] == PolyPoint{3, V(0)});
  auto a3 = shifted_polygon(ShiftBase::Alpha, 3);
  CHECK(a3.polygon.vertices[0] == PolyPoint{0, V(5, 2)});
  CHECK(a3.polygon.vertices[1] == PolyPoint{1, V(1)});
  for (long n : {3, 6, 9, 12}) {
    CHECK(shifted_polygon(ShiftBase::I, n).matches());
    CHECK(shifted_polygon(ShiftBase::Alpha, n).matches());
  }
  CHECK_THROWS_AS(shifted_polygon(ShiftBase::I, 4), std::invalid_argument);
  CHECK_THROWS_AS(shifted_polygon(ShiftBase::One, 0, 2), std::invalid_argument);
}

TEST_CASE("binomial valuations") {
  auto a = binom_check(9, 3, 1, 1);
  CHECK(a.pass);
  CHECK(a.e == 2);
  CHECK(binom_check(8, 2, 3, 3).pass);
  CHECK(binom_check(6, 3, 1, 1).pass);
  for (long p : {2, 3, 5, 7})
    for (long n = p; n <= 400; n += p) CHECK_MESSAGE(binom_check(n, p, 0, 6).pass, n << " " << p);
  auto big = binom_check(6, 3, 0, 3);
  CHECK(big.skipped_j == std::vector<long>{2, 3});
  auto ten = binom_check(10, 2, 0, 3);
  CHECK(ten.pass);
  CHECK(ten.integral_j == std::vector<long>{2, 3});
  CHECK_THROWS_AS(binom_check(10, 3, 0, 2), std::invalid_argument);
}

TEST_CASE("absolute values at roots of G_n") {
  auto two = complexabs_check(2, 2);
  REQUIRE(two.entries.size() == 1);
  CHECK(two.entries[0].roots == 2);
  CHECK(two.entries[0].min_abs == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  auto neg = complexabs_check(-2, -2);
  CHECK(neg.pass);
  CHECK(neg.entries[0].max_abs < 1);
  auto one = complexabs_check(1, 1);
  CHECK(one.pass);
  CHECK(one.entries[0].roots == 0);  // G_1 = 1
  CHECK(complexabs_check(-15, 15).pass);
}
