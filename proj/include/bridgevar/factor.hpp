#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bridgevar/poly.hpp"

namespace bv {

bool is_prime(std::uint64_t n);

/// Degrees of the irreducible factors of f mod p in ascending order, or
/// std::nullopt when p divides the leading coefficient or f mod p has a
/// repeated factor.  Throws std::invalid_argument when p is not prime.
std::optional<std::vector<int>> modp_degree_pattern(const UniPoly& f, std::uint64_t p);

struct Irreducible {
  std::uint64_t prime;
};
struct Reducible {
  /// Degree of an exact factor found over Q.
  int factor_degree;
  mpq_class root;
};
struct Inconclusive {
  /// Proper factor degrees still compatible with every sampled pattern.
  std::vector<int> possible_degrees;
  std::vector<std::uint64_t> primes;
};
using IrreducibilityVerdict = std::variant<Irreducible, Reducible, Inconclusive>;

/// Three-valued irreducibility test over Q from mod-p degree patterns.
IrreducibilityVerdict irreducibility_analysis(const UniPoly& f, int prime_budget = 20);

}  // namespace bv
