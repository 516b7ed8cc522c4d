#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bridgevar/factor.hpp"
#include "bridgevar/models.hpp"
#include "bridgevar/newton.hpp"
#include "bridgevar/poly.hpp"

namespace bv {

enum class KnotClass { Unknot, Trefoil, TorusNonHyperbolic, Hyperbolic, NotAKnot };

std::string to_string(KnotClass c);

/// Raised by operations that only make sense for a particular class of knot.
class Refusal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (k, l) with l even; the input and every map applied are kept.
struct KnotId {
  long k = 0, l = 0;
  long input_k = 0, input_l = 0;
  bool swapped = false;
  std::vector<std::string> trace;
};

/// Swap k and l when l is odd.  Throws std::invalid_argument when kl is odd.
KnotId normalize(long k, long l);

KnotClass classify(long k, long l);

struct TwoBridgeForm {
  long p = 1, q = 1;
  int epsilon = 0;
  /// Odd-length continued fraction of q/p + epsilon with positive entries.
  std::vector<long> cont_frac;
};

/// 1/(a1 + 1/(a2 + ...)).
mpq_class cont_frac_value(const std::vector<long>& a);

/// Odd-length expansion of x in (0, 1].
std::vector<long> odd_cont_frac(const mpq_class& x);

TwoBridgeForm two_bridge_params(long k, long l);

/// True when the two pairs give the same two-bridge knot (q' = q or qq' = 1 mod p).
bool same_two_bridge_knot(long p, long q, long p2, long q2);

class NotCoveredByTable : public std::domain_error {
 public:
  NotCoveredByTable() : std::domain_error("not covered by table") {}
};

/// 4-plat sequence for |k|, |l| large enough; throws NotCoveredByTable otherwise.
std::vector<long> fourplat_sequence(long k, long l);

/// Alexander polynomial of J(k, 2n) in t, shifted to lowest exponent 0.
UniPoly alexander(long k, long l);
/// The same with Delta(1) = 1.
UniPoly alexander_canonical(long k, long l);

bool is_fibered(long k, long l);
/// Fibered knots J(k, 2n): unknot, figure-eight, trefoil, J(3, 2n) n > 0, J(-3, 2n) n < 0, J(+-1, l).
bool in_fibered_list(long k, long l);

/// C(k,l) at y = 2 as a polynomial in r; for canonical and k = l the factor
/// 1 + Phi_{-k}(r)Psi_k(r) cut out by the canonical component.
UniPoly trace_field_poly(long k, long l, bool canonical = false);
int trace_field_degree_formula(long k, long l, bool canonical);
long trace_field_bound(long k, long l);

struct TraceFieldReport {
  long bound = 0;
  int poly_degree = 0;
  UniPoly poly;
  int squarefree_degree = 0;
  IrreducibilityVerdict verdict;
  /// Degrees of the factors still possible over Q, from the verdict.
  std::vector<int> factor_degrees;
  std::string observation;
};

TraceFieldReport trace_field_report(long k, long l);

struct OddWitness {
  UniPoly F;  // in t
  mpz_class leading, constant;
  long prime = 0;
  NewtonPolygon polygon;
  mpq_class positive_slope;
};

struct EvenWitness {
  Point point;  // (r, y) on C(k, l)
  long prime = 0;
  mpq_class valuation;  // v_p(y0 - 2)
};

enum class CommVerdict { Fibered, NotCommensurable };

struct CommensurabilityCertificate {
  KnotId knot;
  CommVerdict verdict = CommVerdict::Fibered;
  std::variant<std::monostate, OddWitness, EvenWitness> witness;
};

/// Throws Refusal for nonhyperbolic knots.
CommensurabilityCertificate commensurability_certificate(long k, long l);

/// Independent re-check of a NotCommensurable witness against c_model.
bool verify_certificate(const CommensurabilityCertificate& cert);

}  // namespace bv
