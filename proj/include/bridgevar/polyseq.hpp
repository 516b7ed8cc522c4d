#pragma once

// Chebyshev-type sequences in u:
//   f_0 = 0, f_1 = 1, f_{j+1} = u f_j - f_{j-1},  g_j = f_j - f_{j-1},
//   Phi_{2j} = f_j, Phi_{2j-1} = g_j,  Psi_k = Phi_{k+1} - Phi_{k-1},
//   F_n = f'_{n+1} f_n - f_{n+1} f'_n,  G_n = g'_{n+1} g_n - g_{n+1} g'_n,
//   H_n = g''_{n+1} g_n - g_{n+1} g''_n,  Delta_k = Phi'_{k+1} Phi_{k-1} - Phi_{k+1} Phi'_{k-1}.

#include <optional>
#include <string>
#include <vector>

#include "bridgevar/poly.hpp"

namespace bv {

enum class SeqTag { F, G, PHI, PSI, DELTA, BIGG, BIGF, BIGH };

/// Sequence members are memoized process-wide behind a mutex.
UniPoly f_poly(long j, Var v = Var::u);
UniPoly g_poly(long j, Var v = Var::u);
UniPoly phi(long k, Var v = Var::u);
UniPoly psi(long k, Var v = Var::u);
UniPoly big_f(long n, Var v = Var::u);
UniPoly big_g(long n, Var v = Var::u);
UniPoly big_h(long n, Var v = Var::u);
UniPoly delta(long k, Var v = Var::u);

UniPoly sequence(SeqTag tag, long index, Var v = Var::u);

struct IdentityResult {
  std::string name;
  bool pass = true;
  /// First index at which the identity failed.
  std::optional<long> counterexample;
  long checked = 0;
};

/// Exact checks of the sequence identities for all |index| <= range.
std::vector<IdentityResult> identity_suite(long range);

}  // namespace bv
