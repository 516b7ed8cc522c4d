#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "bridgevar/poly.hpp"

namespace bv {

struct RationalRoot {
  mpq_class value;
  int multiplicity = 1;
};

/// All rational roots with multiplicity, ascending.
std::vector<RationalRoot> rational_roots(const UniPoly& f);

/// Raised when the simultaneous iteration does not meet the residual bound.
class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, std::vector<std::complex<double>> best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const std::vector<std::complex<double>>& best_iterate() const { return best_; }

 private:
  std::vector<std::complex<double>> best_;
};

/// Approximate complex roots of a separable polynomial by Aberth iteration in
/// 50-digit arithmetic, sorted by rounded real part then imaginary part.
std::vector<std::complex<double>> complex_roots(const UniPoly& f, double tol = 1e-12);

/// |p(z)| evaluated in extended precision.
double abs_eval(const UniPoly& p, std::complex<double> z);

}  // namespace bv
