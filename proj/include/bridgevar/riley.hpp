#pragma once

// Words in the generators a, b of a two-bridge knot group and their images
// under A = [[L, 1], [0, 1/L]], B = [[L, 0], [2 - r, 1/L]].

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bridgevar/laurent.hpp"
#include "bridgevar/poly.hpp"

namespace bv {

struct Letter {
  char gen;  // 'a' or 'b'
  int exp;   // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Total number of generator occurrences (sum of |exponents|).
  int length() const;

  Word inverse() const;
  Word power(long n) const;
  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::string to_string(const Word& w);

/// (ab^-1)^m (a^-1 b)^m for k = 2m, (ab^-1)^m ab (a^-1 b)^m for k = 2m+1.
Word w_k_word(long k);

/// a^{e_1} b^{e_2} a^{e_3} ... with e_i = (-1)^floor(iq/p), i = 1..p-1.
Word schubert_word(long p, long q);

struct Generators {
  LaurentMat2 A, B;
};
Generators gen_matrices();

LaurentMat2 eval_word(const Word& w);
/// Image of w with lambda and r specialized to rationals.
QMat2 eval_word(const Word& w, const mpq_class& lam, const mpq_class& r);
/// Image of w with lambda specialized; entries are polynomials in r.
QPolyMat2 eval_word(const Word& w, const mpq_class& lam);

/// f_n(t) F_{k,1} - f_{n-1}(t) with t = Phi_{-k}(r) Psi_k(r)(y - r) + 2 and
/// F_{k,1} = -Phi_{-k}(r) Phi_{k-1}(r)(y - r) + 1.  Outer variable y, inner r.
BiPoly riley_poly_J(long k, long n);

/// (L - 1/L) W12 + W22 for W the image of w_k^n, rewritten in (r, y).
BiPoly riley_poly_matrix(long k, long n);

/// W11 + (1/L - L) W12 for W the image of the Schubert word, in (r, y).
BiPoly riley_poly_pq(long p, long q);

/// Phi_{-k}(r) Psi_k(r)(y - r) + 2 as a polynomial in (r, y).
BiPoly trace_w_k(long k);

struct OracleResult {
  bool pass = true;
  int samples = 0;
  std::string detail;
};

/// Deterministic sampler of rationals with numerator and denominator bounded by 100.
class RationalSampler {
 public:
  RationalSampler(long k, long n, std::uint64_t seed);
  mpq_class next();
  /// A value outside {0, 1, -1}.
  mpq_class next_lambda();

 private:
  std::mt19937_64 rng_;
};

OracleResult trace_formula_check(long k, int samples, std::uint64_t seed = 0);
OracleResult ideal_generator_check(long k, long n, int samples, std::uint64_t seed = 0);

}  // namespace bv
