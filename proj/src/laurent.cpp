#include "bridgevar/laurent.hpp"

#include "bridgevar/polytext.hpp"

namespace bv {

LaurentPoly::LaurentPoly(UniPoly c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(int low_exp, std::vector<UniPoly> coeffs) : low_(low_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const UniPoly& c, int e) { return LaurentPoly(e, {c}); }

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

UniPoly LaurentPoly::coeff(int e) const {
  int i = e - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return UniPoly(Var::r);
  return coeffs_[i];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high_exp(), o.high_exp());
  std::vector<UniPoly> out(hi - lo + 1, UniPoly(Var::r));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[low_ - lo + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[o.low_ - lo + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<UniPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1, UniPoly(Var::r));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

QPoly LaurentPoly::at_lambda(const mpq_class& lam) const {
  QPoly acc(Var::r);
  if (is_zero()) return acc;
  mpq_class inv = 1 / lam;
  mpq_class pw = 1;
  for (int i = 0; i < (low_ < 0 ? -low_ : low_); ++i) pw *= low_ < 0 ? inv : lam;
  for (const auto& c : coeffs_) {
    acc += to_q(c).set_var(Var::r) * pw;
    pw *= lam;
  }
  return acc;
}

mpq_class LaurentPoly::at(const mpq_class& lam, const mpq_class& r) const {
  return eval<mpq_class>(at_lambda(lam), r);
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.high_exp(); e >= p.low_exp(); --e) {
    UniPoly c = p.coeff(e);
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    out += "(" + to_string(c) + ")";
    if (e != 0) out += "*L^" + std::to_string(e);
  }
  return out;
}

BiPoly rewrite_in_y(const LaurentPoly& p) {
  const UniPoly zero(Var::r);
  for (int e = p.low_exp(); e <= p.high_exp(); ++e) {
    UniPoly c = p.coeff(e);
    if (c.is_zero()) continue;
    if (e % 2 != 0 || c != p.coeff(-e))
      throw NotInTraceSubring("(" + to_string(c) + ")*L^" + std::to_string(e));
  }
  // Peel off the top power mu^d (mu = lambda^2) with (mu + 1/mu)^d.
  LaurentPoly rest = p;
  std::vector<UniPoly> out;
  const LaurentPoly y = LaurentPoly::lambda(2) + LaurentPoly::lambda(-2);
  while (!rest.is_zero()) {
    int top = rest.high_exp();
    if (top < 0 || top % 2 != 0) throw NotInTraceSubring(to_string(rest));
    int d = top / 2;
    UniPoly c = rest.coeff(top);
    if (static_cast<int>(out.size()) <= d) out.resize(d + 1, zero);
    out[d] += c;
    LaurentPoly yd(UniPoly(mpz_class(1), Var::r));
    for (int i = 0; i < d; ++i) yd *= y;
    rest -= LaurentPoly(c) * yd;
  }
  return BiPoly(std::move(out), Var::y);
}

LaurentMat2 mat_power(const LaurentMat2& m, long n) {
  LaurentPoly one(UniPoly(mpz_class(1), Var::r));
  return mat_power(m, n, one, LaurentPoly());
}

}  // namespace bv
