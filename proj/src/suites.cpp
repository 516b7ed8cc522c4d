#include "bridgevar/suites.hpp"

#include <cstdlib>

#include "bridgevar/algebra.hpp"
#include "bridgevar/knotprops.hpp"
#include "bridgevar/newton.hpp"
#include "bridgevar/polyseq.hpp"
#include "bridgevar/riley.hpp"

namespace bv {

namespace {

void fail(SuiteCheck& c, const std::string& detail) {
  if (c.pass) c.detail = detail;
  c.pass = false;
}

}  // namespace

std::vector<SuiteCheck> identities_suite(long range) {
  std::vector<SuiteCheck> out;
  for (const auto& r : identity_suite(range)) {
    SuiteCheck c{r.name, r.pass, r.checked, ""};
    if (r.counterexample) c.detail = "fails at index " + std::to_string(*r.counterexample);
    out.push_back(c);
  }
  return out;
}

std::vector<SuiteCheck> newton_suite() {
  std::vector<SuiteCheck> out;
  SuiteCheck one{"newton polygon at alpha = 1, p in {2,3,5}, n <= 12", true, 0, ""};
  for (long p : {2, 3, 5})
    for (long n = 1; n <= 12; ++n, ++one.checked)
      if (!shifted_polygon(ShiftBase::One, n, p).matches())
        fail(one, "n = " + std::to_string(n) + ", p = " + std::to_string(p));
  out.push_back(one);

  SuiteCheck gi{"newton polygon at alpha = i, n in {3,6,9,12}", true, 0, ""};
  SuiteCheck ga{"newton polygon at alpha = -2+sqrt3, n in {3,6,9,12}", true, 0, ""};
  for (long n : {3, 6, 9, 12}) {
    ++gi.checked;
    ++ga.checked;
    if (!shifted_polygon(ShiftBase::I, n).matches()) fail(gi, "n = " + std::to_string(n));
    if (!shifted_polygon(ShiftBase::Alpha, n).matches()) fail(ga, "n = " + std::to_string(n));
  }
  out.push_back(gi);
  out.push_back(ga);

  SuiteCheck bin{"binomial valuations, n <= 81, p in {2,3}", true, 0, ""};
  for (long p : {2, 3})
    for (long n = p; n <= 81; n += p) {
      BinomCheck b = binom_check(n, p, 0, 7);
      bin.checked += b.checked;
      if (!b.pass) fail(bin, "n = " + std::to_string(n) + ": " + b.detail);
    }
  out.push_back(bin);

  ComplexAbsCheck ca = complexabs_check(-10, 10);
  SuiteCheck abs{"|g_{n+1}/g_n| at roots of G_n, 1 <= |n| <= 10", ca.pass, 0, ""};
  for (const auto& e : ca.entries) {
    abs.checked += e.roots;
    if (!e.pass && abs.detail.empty()) abs.detail = "n = " + std::to_string(e.n);
  }
  out.push_back(abs);
  return out;
}

std::vector<SuiteCheck> riley_suite(long kmax, long nmax, std::uint64_t seed, int samples) {
  std::vector<SuiteCheck> out;
  SuiteCheck tr{"trace of w_k closed form vs matrices", true, 0, ""};
  for (long k = -kmax; k <= kmax; ++k) {
    OracleResult o = trace_formula_check(k, samples, seed);
    tr.checked += o.samples;
    if (!o.pass) fail(tr, "k = " + std::to_string(k) + ": " + o.detail);
  }
  out.push_back(tr);

  SuiteCheck mat{"Riley polynomial: closed form vs matrix word", true, 0, ""};
  SuiteCheck pq{"Riley polynomial: closed form vs Schubert word", true, 0, ""};
  SuiteCheck ideal{"Riley polynomial generates the commutator ideal", true, 0, ""};
  for (long k = -kmax; k <= kmax; ++k) {
    if (std::labs(k) < 2) continue;
    for (long n = -nmax; n <= nmax; ++n) {
      if (n == 0) continue;
      const std::string at = "k = " + std::to_string(k) + ", n = " + std::to_string(n);
      BiPoly J = riley_poly_J(k, n);
      ++mat.checked;
      if (!equal_up_to_unit(J, riley_poly_matrix(k, n))) fail(mat, at);
      TwoBridgeForm f = two_bridge_params(k, 2 * n);
      ++pq.checked;
      if (!equal_up_to_unit(J, riley_poly_pq(f.p, f.q))) fail(pq, at);
      OracleResult o = ideal_generator_check(k, n, 3, seed);
      ideal.checked += o.samples;
      if (!o.pass) fail(ideal, at + ": " + o.detail);
    }
  }
  out.push_back(mat);
  out.push_back(pq);
  out.push_back(ideal);
  return out;
}

}  // namespace bv
