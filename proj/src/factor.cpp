#include "bridgevar/factor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "bridgevar/roots.hpp"

namespace bv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Fp = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Fp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Fp& f) { return f.empty() ? -1 : static_cast<int>(f.size()) - 1; }

Fp reduce(const UniPoly& f, u64 p) {
  Fp out;
  out.reserve(f.coeffs().size());
  mpz_class pp(static_cast<unsigned long>(p));
  for (const auto& c : f.coeffs()) {
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    out.push_back(m.get_ui());
  }
  trim(out);
  return out;
}

void make_monic(Fp& f, u64 p) {
  if (f.empty()) return;
  u64 inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
}

// a mod b, b nonzero.
Fp polymod(Fp a, const Fp& b, u64 p) {
  int db = deg(b);
  u64 inv = invmod(b.back(), p);
  for (int i = deg(a); i >= db; --i) {
    u64 c = mulmod(a[i], inv, p);
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mulmod(c, b[j], p)) % p;
  }
  if (static_cast<int>(a.size()) > db) a.resize(std::max(db, 0));
  trim(a);
  return a;
}

Fp polydiv(Fp a, const Fp& b, u64 p) {
  int db = deg(b);
  if (deg(a) < db) return {};
  Fp q(deg(a) - db + 1);
  u64 inv = invmod(b.back(), p);
  for (int i = deg(a); i >= db; --i) {
    u64 c = mulmod(a[i], inv, p);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(q);
  return q;
}

Fp mulmodpoly(const Fp& a, const Fp& b, const Fp& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Fp out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(out);
  return polymod(std::move(out), m, p);
}

Fp powpoly(Fp base, u64 e, const Fp& m, u64 p) {
  Fp r{1};
  r = polymod(r, m, p);
  base = polymod(base, m, p);
  while (e) {
    if (e & 1) r = mulmodpoly(r, base, m, p);
    e >>= 1;
    if (e) base = mulmodpoly(base, base, m, p);
  }
  return r;
}

Fp gcdpoly(Fp a, Fp b, u64 p) {
  while (!b.empty()) {
    Fp r = polymod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a, p);
  return a;
}

Fp deriv(const Fp& f, u64 p) {
  if (f.size() <= 1) return {};
  Fp out(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) out[i - 1] = mulmod(f[i], i % p, p);
  trim(out);
  return out;
}

Fp sub(Fp a, const Fp& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::set<int> subset_sums(const std::vector<int>& pattern, int total) {
  std::vector<char> reach(total + 1, 0);
  reach[0] = 1;
  for (int d : pattern)
    for (int s = total; s >= d; --s)
      if (reach[s - d]) reach[s] = 1;
  std::set<int> out;
  for (int s = 1; s < total; ++s)
    if (reach[s]) out.insert(s);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::vector<int>> modp_degree_pattern(const UniPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (f.is_zero()) throw std::domain_error("degree pattern of zero polynomial");
  Fp g = reduce(f, p);
  if (deg(g) != f.degree()) return std::nullopt;
  make_monic(g, p);
  if (deg(gcdpoly(g, deriv(g, p), p)) > 0) return std::nullopt;

  std::vector<int> pattern;
  Fp x{0, 1};
  Fp h = polymod(x, g, p);
  for (int d = 1; deg(g) >= 2 * d; ++d) {
    h = powpoly(h, p, g, p);
    Fp common = gcdpoly(g, sub(h, x, p), p);
    int dc = deg(common);
    if (dc > 0) {
      for (int i = 0; i < dc / d; ++i) pattern.push_back(d);
      g = polydiv(g, common, p);
      h = polymod(h, g, p);
    }
  }
  if (deg(g) > 0) pattern.push_back(deg(g));
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

IrreducibilityVerdict irreducibility_analysis(const UniPoly& f, int prime_budget) {
  if (f.degree() < 1) throw std::domain_error("irreducibility of a constant");
  int n = f.degree();
  auto roots = rational_roots(f);
  if (!roots.empty()) return Reducible{1, roots.front().value};
  if (n == 1) return Irreducible{0};

  mpz_class prod = abs(f.lead() * f.trailing());
  double start = std::max(50.0, std::pow(prod.get_d(), 0.25));
  u64 p = static_cast<u64>(std::ceil(start));
  std::set<int> possible;
  for (int s = 1; s < n; ++s) possible.insert(s);
  Inconclusive inc;
  int good = 0;
  for (int scanned = 0; good < prime_budget && scanned < 100000; ++p) {
    if (!is_prime(p)) continue;
    ++scanned;
    auto pattern = modp_degree_pattern(f, p);
    if (!pattern) continue;
    ++good;
    inc.primes.push_back(p);
    if (pattern->size() == 1) return Irreducible{p};
    std::set<int> sums = subset_sums(*pattern, n);
    std::set<int> keep;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                          std::inserter(keep, keep.begin()));
    possible = std::move(keep);
    if (possible.empty()) return Irreducible{p};
  }
  inc.possible_degrees.assign(possible.begin(), possible.end());
  return inc;
}

}  // namespace bv
