#pragma once

// Text format: integer coefficients, caret powers, explicit '*', e.g. u^2-2*u+2.

#include <string>

#include "bridgevar/poly.hpp"

namespace bv {

std::string to_string(const mpz_class& c);
std::string to_string(const mpq_class& c);
std::string to_string(const UniPoly& p);
std::string to_string(const QPoly& p);
/// Terms ordered by descending outer then inner degree.
std::string to_string(const BiPoly& p);

/// Parse a univariate polynomial; the variable must be one of u,r,t,y,x,S
/// (or absent for constants, which get `fallback`).
UniPoly parse_unipoly(const std::string& text, Var fallback = Var::u);

/// Parse a polynomial in at most the two named variables.
BiPoly parse_bipoly(const std::string& text, Var outer, Var inner);

bool parse_var(char c, Var& out);

}  // namespace bv
