#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridgevar/algebra.hpp"
#include "bridgevar/geometry.hpp"
#include "bridgevar/polytext.hpp"

using namespace bv;

namespace {
BiPoly rt(const char* s) { return parse_bipoly(s, Var::t, Var::r); }
}  // namespace

TEST_CASE("affine singular locus") {
  auto node = affine_singular_locus(rt("r*t"));
  CHECK(!node.empty);
  REQUIRE(node.branches.size() == 1);
  REQUIRE(node.branches[0].rational_points.size() == 1);
  CHECK(node.branches[0].rational_points[0] == Point{0, 0});

  auto cusp = affine_singular_locus(rt("t^2-r^3"));
  REQUIRE(cusp.branches.size() == 1);
  CHECK(cusp.branches[0].rational_points[0] == Point{0, 0});

  CHECK(affine_singular_locus(rt("t^2-r^3-r")).empty);
  CHECK(affine_singular_locus(rt("t-r^2")).empty);
  CHECK(affine_singular_locus(d_model(2, 4).equation).empty);
  CHECK(affine_singular_locus(d_model(2, 4).equation).gcd_degree <= 0);

  CHECK_THROWS_WITH_AS(affine_singular_locus(rt("(t-r)^2")), "non-reduced input", std::domain_error);
  CHECK_THROWS_WITH_AS(affine_singular_locus(rt("(r-1)^2*t+(r-1)^2")), "non-reduced input", std::domain_error);
  CHECK_THROWS_AS(affine_singular_locus(rt("5")), std::invalid_argument);
}

TEST_CASE("singular points of D(l,l) are the D0 and D1 intersections") {
  for (long l : {4, -4, 6, 8}) {
    AffineLocus loc = affine_singular_locus(d_model(l, l).equation);
    DSplit s = d_split(l);
    // On the line t = r, D1 restricts to D1(r, r).
    UniPoly on_line = primitive_part(substitute_outer(s.d1.equation, UniPoly::gen(Var::r)));
    UniPoly P(mpz_class(1), Var::r);
    for (const auto& br : loc.branches) {
      REQUIRE(br.G.size() == 2);
      // G = t - r modulo P
      CHECK(rem(br.G[0] + QPoly::gen(Var::r), to_q(br.P)).is_zero());
      P = P * br.P;
    }
    CHECK(equal_up_to_unit(P, squarefree_part(on_line)));
  }
}

TEST_CASE("infinity transversality") {
  auto a = infinity_transversality(d_model(2, -4).equation);
  CHECK(a.transversal);
  CHECK(a.points_on_r_infinity == 2);
  CHECK(a.points_on_t_infinity == 1);
  CHECK(infinity_transversality(d_model(4, 6).equation).transversal);
  // The parabola t = r^2 is tangent to t = oo at (oo, oo).
  auto p = infinity_transversality(rt("r^2-t"));
  CHECK(!p.transversal);
  CHECK(p.corner_on_curve);
  CHECK(p.points_on_r_infinity == 1);
  CHECK(p.points_on_t_infinity == 1);
  CHECK(!p.witnesses.empty());
  CHECK(infinity_transversality(rt("r*t-1")).transversal);
}

TEST_CASE("smoothness certificates") {
  auto fig8 = smoothness_certificate(2, -2);
  CHECK(fig8.smooth());
  CHECK(fig8.target == ModelKind::D);

  auto c66 = smoothness_certificate(6, 6);
  CHECK(c66.smooth());
  CHECK(c66.target == ModelKind::D1);
  REQUIRE(c66.union_locus);
  CHECK(!c66.union_locus->empty);
  CHECK(c66.union_intersections > 0);
  CHECK(c66.delta_filter_consistent);

  auto tref = smoothness_certificate(2, 2);
  CHECK(tref.refused);
  CHECK(tref.refusal == "LineUnion/trefoil");
  CHECK(smoothness_certificate(1, 6).refused);
  CHECK(smoothness_certificate(0, 4).refused);
}

TEST_CASE("component counts") {
  CHECK(component_count(3, 4).count == 1);
  CHECK(component_count(3, 4).cross_checked);
  CHECK(component_count(4, 4).count == 2);
  CHECK(component_count(4, 4).cross_checked);
  CHECK(component_count(1, 6).degenerate);
  for (long l : {2, -2}) {
    CHECK(d_split(l).d1.state == ModelState::Empty);
    CHECK(component_count(l, l).degenerate);
  }
}

TEST_CASE("genus of Y") {
  auto g46 = genus_Y(4, 6, smoothness_certificate(4, 6));
  CHECK(g46.genus_bidegree == 2);
  CHECK(g46.genus_formula == 2);
  CHECK(g46.hyperelliptic);
  auto g88 = genus_Y(8, 8, smoothness_certificate(8, 8));
  CHECK(*g88.d0_genus == 0);
  CHECK(*g88.d1_genus_bidegree == 4);
  CHECK(*g88.d1_genus_formula == 4);
  CHECK(!*g88.d1_hyperelliptic);
  for (long l : {-8, -2, 4, 10}) CHECK(genus_Y(2, l, smoothness_certificate(2, l)).genus_bidegree == 0);
  CHECK_THROWS_AS(genus_Y(4, 6, smoothness_certificate(4, 8)), std::logic_error);
}

TEST_CASE("odd point counts") {
  auto a = odd_point_count(2, -2);
  CHECK(a.formula == 4);
  CHECK(a.oracle == 4);
  CHECK(a.case_constant == 1);
  auto b = odd_point_count(3, 4);
  CHECK(b.formula == 8);
  CHECK(b.oracle == 8);
  auto c = odd_point_count(4, 4);
  CHECK(c.formula == 12);
  CHECK(c.oracle == 12);
  CHECK(odd_point_count(4, 4, Component::D0).oracle == 4);
  CHECK(odd_point_count(4, 4, Component::D1).oracle == 8);
  CHECK_THROWS_AS(odd_point_count(3, 4, Component::D0), std::invalid_argument);
  CHECK_THROWS_AS(odd_point_count(2, 2), std::invalid_argument);
  CHECK(odd_point_count(-3, 4).uncovered_case);
  CHECK(!odd_point_count(3, -4).uncovered_case);
}

TEST_CASE("genus of X") {
  CHECK(genus_X(2, -2, smoothness_certificate(2, -2)).genus_rh == 1);
  CHECK(genus_X(2, -2, smoothness_certificate(2, -2)).genus_formula == 1);
  auto g44 = genus_X(4, 4, smoothness_certificate(4, 4));
  CHECK(*g44.x0_rh == 1);
  CHECK(*g44.x0_formula == 1);
  CHECK(*g44.x1_rh == 3);
  CHECK(*g44.x1_formula == 3);
  auto g = genus_X(3, -4, smoothness_certificate(3, -4));
  CHECK(g.genus_rh == 4);
  CHECK(g.genus_formula == 4);
}

TEST_CASE("grid of double entries") {
  for (long k = -10; k <= 10; ++k)
    for (long l = -10; l <= 10; l += 2) {
      if (std::labs(k) < 2 || l == 0 || (k == l && std::labs(l) == 2)) continue;
      auto cert = smoothness_certificate(k, l);
      REQUIRE_MESSAGE(cert.smooth(), k << "," << l);
      CHECK(cert.delta_filter_consistent);
      auto gy = genus_Y(k, l, cert);
      CHECK_MESSAGE(gy.genus_bidegree == gy.genus_formula, k << "," << l);
      auto gx = genus_X(k, l, cert);
      CHECK_MESSAGE(gx.genus_rh == gx.genus_formula, k << "," << l);
      CHECK(gx.odd_points % 2 == 0);
      auto a = odd_point_count(k, l);
      CHECK_MESSAGE(a.agree(), k << "," << l);
      if (k == l) {
        CHECK(*gx.x0_rh == *gx.x0_formula);
        CHECK(odd_point_count(k, l, Component::D0).agree());
        CHECK(odd_point_count(k, l, Component::D1).agree());
      }
    }
}
