#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridgevar/algebra.hpp"
#include "bridgevar/polyseq.hpp"
#include "bridgevar/polytext.hpp"
#include "bridgevar/riley.hpp"

using namespace bv;

namespace {
LaurentPoly lconst(long c) { return LaurentPoly(UniPoly(mpz_class(c), Var::r)); }
}  // namespace

TEST_CASE("generator matrices") {
  auto [A, B] = gen_matrices();
  CHECK(A.det() == lconst(1));
  CHECK(B.det() == lconst(1));
  const LaurentPoly r(UniPoly::gen(Var::r));
  CHECK((A * B.sl2_inverse()).trace() == r);
  CHECK((A.sl2_inverse() * B).trace() == r);
}

TEST_CASE("words") {
  CHECK(to_string(w_k_word(2)) == "a b^-1 a^-1 b");
  CHECK(schubert_word(5, 3) == w_k_word(2));
  // (ab^-1)^-1 ab (a^-1b)^-1 = b a^-1 a b b^-1 a
  CHECK(to_string(w_k_word(-1)) == "b a");
  CHECK(w_k_word(1) == Word({{'a', 1}, {'b', 1}}));
  CHECK(w_k_word(0).empty());
  CHECK(w_k_word(4).length() == 8);
  CHECK(w_k_word(-3).power(2).inverse() == w_k_word(-3).power(-2));
}

TEST_CASE("schubert word errors name the constraint") {
  CHECK_THROWS_WITH_AS(schubert_word(4, 1), doctest::Contains("p must be odd"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(schubert_word(5, 2), doctest::Contains("q must be odd"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(schubert_word(5, 7), doctest::Contains("(-p, p]"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(schubert_word(9, 3), doctest::Contains("coprime"), std::invalid_argument);
  CHECK_THROWS_AS(schubert_word(-5, 3), std::invalid_argument);
}

TEST_CASE("word evaluation") {
  auto I = eval_word(Word());
  CHECK(I == identity(lconst(1), lconst(0)));
  auto M = eval_word(w_k_word(2));
  CHECK(mat_power(M, 2) == M * M);
  CHECK(mat_power(M, -1) * M == I);
  CHECK(eval_word(w_k_word(3).power(2)) == mat_power(eval_word(w_k_word(3)), 2));
}

TEST_CASE("power of a matrix through f_n of its trace") {
  RationalSampler rs(3, 3, 7);
  const Word w = w_k_word(3);
  for (int i = 0; i < 20; ++i) {
    mpq_class lam = rs.next_lambda(), r = rs.next();
    QMat2 M = eval_word(w, lam, r);
    mpq_class t = M.trace();
    QMat2 cube = mat_power<mpq_class>(M, 3, 1, 0);
    mpq_class f3 = eval_q(f_poly(3), t), f2 = eval_q(f_poly(2), t);
    QMat2 rhs{f3 * M.a - f2, f3 * M.b, f3 * M.c, f3 * M.d - f2};
    CHECK(cube == rhs);
  }
}

TEST_CASE("riley polynomial of the unknot is constant") {
  for (long k = -4; k <= 4; ++k) CHECK(riley_poly_J(k, 0) == parse_bipoly("1", Var::y, Var::r));
}

TEST_CASE("figure-eight riley polynomial") {
  BiPoly J = riley_poly_J(2, -1);
  CHECK(inner_degree(J) == 2);
  CHECK(equal_up_to_unit(J, riley_poly_matrix(2, -1)));
  // J(2,-2) has two-bridge normal form (5,3)
  CHECK(equal_up_to_unit(J, riley_poly_pq(5, 3)));
}

TEST_CASE("matrix extraction agrees with the closed form") {
  for (auto [k, n] : std::vector<std::pair<long, long>>{{3, 1}, {2, 1}, {3, -2}, {-4, 3}, {5, -1}, {-3, 2}})
    CHECK_MESSAGE(equal_up_to_unit(riley_poly_J(k, n), riley_poly_matrix(k, n)), k << "," << n);
}

TEST_CASE("trefoil from its schubert word") {
  BiPoly f = normalize_unit(riley_poly_pq(3, 1));
  CHECK(inner_degree(f) == 1);
  CHECK(f.degree() == 1);
}

TEST_CASE("rewrite refuses odd lambda powers") {
  CHECK_THROWS_WITH_AS(rewrite_in_y(LaurentPoly::lambda(1)), doctest::Contains("not in trace subring"),
                       NotInTraceSubring);
  CHECK(rewrite_in_y(LaurentPoly::lambda(2) + LaurentPoly::lambda(-2)) == parse_bipoly("y", Var::y, Var::r));
}

TEST_CASE("trace formula for w_k") {
  CHECK(trace_formula_check(-4, 50).pass);
  for (long k = -9; k <= 9; ++k) {
    auto res = trace_formula_check(k, 20, 11);
    CHECK_MESSAGE(res.pass, k << ": " << res.detail);
    CHECK(res.samples == 20);
  }
}

TEST_CASE("ideal generated by the commutation relation") {
  CHECK(ideal_generator_check(2, -1, 10).pass);
  CHECK(ideal_generator_check(5, 2, 10).pass);
  CHECK(ideal_generator_check(3, -2, 10).pass);
  auto vac = ideal_generator_check(0, 1, 10);
  CHECK(vac.pass);
  CHECK(vac.samples == 0);
}

TEST_CASE("sampler is reproducible") {
  RationalSampler a(2, 3, 99), b(2, 3, 99), c(2, 3, 100);
  std::vector<mpq_class> va, vb, vc;
  for (int i = 0; i < 5; ++i) {
    va.push_back(a.next());
    vb.push_back(b.next());
    vc.push_back(c.next());
  }
  CHECK(va == vb);
  CHECK(va != vc);
}
