#include "bridgevar/riley.hpp"

#include <numeric>
#include <stdexcept>

#include "bridgevar/algebra.hpp"
#include "bridgevar/polyseq.hpp"
#include "bridgevar/polytext.hpp"

namespace bv {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <class R>
struct GenSet {
  Mat2<R> A, Ainv, B, Binv;
  R one, zero;
};

template <class R>
GenSet<R> make_gens(const R& lam, const R& laminv, const R& two_minus_r, const R& one, const R& zero) {
  GenSet<R> g;
  g.A = {lam, one, zero, laminv};
  g.Ainv = {laminv, -one, zero, lam};
  g.B = {lam, zero, two_minus_r, laminv};
  g.Binv = {laminv, zero, -two_minus_r, lam};
  g.one = one;
  g.zero = zero;
  return g;
}

template <class R>
Mat2<R> eval_with(const Word& w, const GenSet<R>& g) {
  Mat2<R> m = identity(g.one, g.zero);
  for (const auto& l : w.letters()) {
    const Mat2<R>& step = l.gen == 'a' ? (l.exp > 0 ? g.A : g.Ainv) : (l.exp > 0 ? g.B : g.Binv);
    for (int i = 0; i < std::abs(l.exp); ++i) m = m * step;
  }
  return m;
}

GenSet<LaurentPoly> laurent_gens() {
  const UniPoly r = UniPoly::gen(Var::r);
  const UniPoly two(mpz_class(2), Var::r);
  return make_gens(LaurentPoly::lambda(1), LaurentPoly::lambda(-1), LaurentPoly(two - r),
                   LaurentPoly(UniPoly(mpz_class(1), Var::r)), LaurentPoly());
}

BiPoly y_minus_r() { return parse_bipoly("y-r", Var::y, Var::r); }

}  // namespace

Word::Word(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exp == 0) continue;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

int Word::length() const {
  int n = 0;
  for (const auto& l : letters_) n += std::abs(l.exp);
  return n;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return Word(std::move(out));
}

Word operator*(const Word& x, const Word& y) {
  std::vector<Letter> out = x.letters_;
  out.insert(out.end(), y.letters_.begin(), y.letters_.end());
  return Word(std::move(out));
}

Word Word::power(long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < std::labs(n); ++i) out = out * base;
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += " ";
    out += l.gen;
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

Word w_k_word(long k) {
  long m = floor_div(k, 2);
  Word left = Word({{'a', 1}, {'b', -1}}).power(m);
  Word right = Word({{'a', -1}, {'b', 1}}).power(m);
  if (k - 2 * m == 0) return left * right;
  return left * Word({{'a', 1}, {'b', 1}}) * right;
}

Word schubert_word(long p, long q) {
  if (p < 1) throw std::invalid_argument("schubert word: p must be positive");
  if (p % 2 == 0) throw std::invalid_argument("schubert word: p must be odd");
  if (q % 2 == 0) throw std::invalid_argument("schubert word: q must be odd");
  if (!(-p < q && q <= p)) throw std::invalid_argument("schubert word: q must lie in (-p, p]");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("schubert word: p and q must be coprime");
  std::vector<Letter> letters;
  for (long i = 1; i <= p - 1; ++i) {
    int e = floor_div(i * q, p) % 2 == 0 ? 1 : -1;
    letters.push_back({i % 2 == 1 ? 'a' : 'b', e});
  }
  return Word(std::move(letters));
}

Generators gen_matrices() {
  auto g = laurent_gens();
  return {g.A, g.B};
}

LaurentMat2 eval_word(const Word& w) { return eval_with(w, laurent_gens()); }

QMat2 eval_word(const Word& w, const mpq_class& lam, const mpq_class& r) {
  return eval_with(w, make_gens<mpq_class>(lam, 1 / lam, 2 - r, 1, 0));
}

QPolyMat2 eval_word(const Word& w, const mpq_class& lam) {
  QPoly one(mpq_class(1), Var::r);
  QPoly two_minus_r(std::vector<mpq_class>{2, -1}, Var::r);
  return eval_with(w, make_gens<QPoly>(QPoly(lam, Var::r), QPoly(mpq_class(1 / lam), Var::r), two_minus_r, one,
                                       QPoly(Var::r)));
}

BiPoly trace_w_k(long k) {
  UniPoly pp = phi(-k, Var::r) * psi(k, Var::r);
  BiPoly t = lift_inner(pp, Var::y) * y_minus_r();
  return t + BiPoly(UniPoly(mpz_class(2), Var::r), Var::y);
}

BiPoly riley_poly_J(long k, long n) {
  BiPoly t = trace_w_k(k);
  UniPoly pp = phi(-k, Var::r) * phi(k - 1, Var::r);
  BiPoly f1 = BiPoly(UniPoly(mpz_class(1), Var::r), Var::y) - lift_inner(pp, Var::y) * y_minus_r();
  return substitute(f_poly(n), t) * f1 - substitute(f_poly(n - 1), t);
}

BiPoly riley_poly_matrix(long k, long n) {
  LaurentMat2 w = eval_word(w_k_word(k).power(n));
  LaurentPoly f = (LaurentPoly::lambda(1) - LaurentPoly::lambda(-1)) * w.b + w.d;
  return rewrite_in_y(f);
}

BiPoly riley_poly_pq(long p, long q) {
  LaurentMat2 w = eval_word(schubert_word(p, q));
  LaurentPoly f = w.a + (LaurentPoly::lambda(-1) - LaurentPoly::lambda(1)) * w.b;
  return rewrite_in_y(f);
}

RationalSampler::RationalSampler(long k, long n, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n), seed};
  rng_.seed(seq);
}

mpq_class RationalSampler::next() {
  std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
  mpq_class v(num(rng_), den(rng_));
  v.canonicalize();
  return v;
}

mpq_class RationalSampler::next_lambda() {
  for (;;) {
    mpq_class v = next();
    if (v != 0 && v != 1 && v != -1) return v;
  }
}

OracleResult trace_formula_check(long k, int samples, std::uint64_t seed) {
  OracleResult res;
  RationalSampler rs(k, 0, seed);
  BiPoly formula = trace_w_k(k);
  Word w = w_k_word(k);
  for (int i = 0; i < samples; ++i) {
    mpq_class lam = rs.next_lambda(), r = rs.next();
    mpq_class y = lam * lam + 1 / (lam * lam);
    mpq_class tr = eval_word(w, lam, r).trace();
    mpq_class expect = eval_point(formula, r, y);
    ++res.samples;
    if (tr != expect) {
      res.pass = false;
      res.detail = "lambda=" + to_string(lam) + " r=" + to_string(r) + ": trace " + to_string(tr) +
                   " vs formula " + to_string(expect);
      return res;
    }
  }
  return res;
}

OracleResult ideal_generator_check(long k, long n, int samples, std::uint64_t seed) {
  OracleResult res;
  BiPoly F = riley_poly_J(k, n);
  if (F.degree() <= 0 && inner_degree(F) <= 0) {
    res.detail = "vacuous: generator is a nonzero constant";
    return res;
  }
  RationalSampler rs(k, n, seed);
  Word w = w_k_word(k).power(n);
  for (int i = 0; i < samples; ++i) {
    mpq_class lam = rs.next_lambda();
    mpq_class y = lam * lam + 1 / (lam * lam);
    QPolyMat2 W = eval_word(w, lam);
    QPolyMat2 A = eval_word(Word({{'a', 1}}), lam);
    QPolyMat2 B = eval_word(Word({{'b', 1}}), lam);
    QPolyMat2 D = A * W - W * B;
    UniPoly g(Var::r);
    for (const QPoly* e : {&D.a, &D.b, &D.c, &D.d})
      if (!e->is_zero()) g = poly_gcd(g, clear_denominators(*e));
    UniPoly at_y = clear_denominators(eval_outer(F, y));
    ++res.samples;
    if (!equal_up_to_unit(g, at_y)) {
      res.pass = false;
      res.detail = "lambda=" + to_string(lam) + ": gcd " + to_string(g) + " vs " + to_string(at_y);
      return res;
    }
  }
  return res;
}

}  // namespace bv
