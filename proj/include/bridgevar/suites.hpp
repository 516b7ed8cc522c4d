#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bv {

struct SuiteCheck {
  std::string name;
  bool pass = true;
  long checked = 0;
  std::string detail;
};

/// Sequence identities for |index| <= range.
std::vector<SuiteCheck> identities_suite(long range);

/// Newton-polygon vertices at alpha = 1, i, -2 + sqrt3, binomial valuations and
/// the modulus bound at roots of G_n.
std::vector<SuiteCheck> newton_suite();

/// Trace formula, Riley polynomial routes and the ideal generator, 2 <= |k| <= kmax, 1 <= |n| <= nmax.
std::vector<SuiteCheck> riley_suite(long kmax, long nmax, std::uint64_t seed, int samples = 20);

}  // namespace bv
