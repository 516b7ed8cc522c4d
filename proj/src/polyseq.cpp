#include "bridgevar/polyseq.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>

#include "bridgevar/algebra.hpp"

namespace bv {

namespace {

// f_j for j >= 0 in `up`, f_{-j} in `down`, both grown on demand.
class FTable {
 public:
  UniPoly get(long j) {
    {
      std::shared_lock lock(mu_);
      if (auto* p = lookup(j)) return *p;
    }
    std::unique_lock lock(mu_);
    grow(j);
    return *lookup(j);
  }

 private:
  const UniPoly* lookup(long j) const {
    if (j >= 0 && j < static_cast<long>(up_.size())) return &up_[j];
    if (j < 0 && -j < static_cast<long>(down_.size())) return &down_[-j];
    return nullptr;
  }
  void grow(long j) {
    const UniPoly u = UniPoly::gen(Var::u);
    if (up_.empty()) {
      up_.push_back(UniPoly(Var::u));
      up_.push_back(UniPoly(mpz_class(1), Var::u));
      down_.push_back(up_[0]);
    }
    while (j >= static_cast<long>(up_.size())) {
      size_t n = up_.size();
      up_.push_back(u * up_[n - 1] - up_[n - 2]);
    }
    while (j < 0 && -j >= static_cast<long>(down_.size())) {
      // f_{i-1} = u f_i - f_{i+1}
      size_t n = down_.size();
      const UniPoly& fi = down_[n - 1];
      const UniPoly& fi1 = n >= 2 ? down_[n - 2] : up_[1];
      down_.push_back(u * fi - fi1);
    }
  }

  std::shared_mutex mu_;
  std::vector<UniPoly> up_;
  std::vector<UniPoly> down_;
};

FTable& table() {
  static FTable t;
  return t;
}

UniPoly f_u(long j) { return table().get(j); }
UniPoly g_u(long j) { return f_u(j) - f_u(j - 1); }

long floor_div2(long k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

UniPoly phi_u(long k) {
  // Phi_{2j} = f_j, Phi_{2j-1} = g_j
  if (k % 2 == 0) return f_u(k / 2);
  return g_u(floor_div2(k + 1));
}

UniPoly combo(const UniPoly& a1, const UniPoly& a0, int order) {
  // a1^(order) a0 - a1 a0^(order)
  UniPoly d1 = a1, d0 = a0;
  for (int i = 0; i < order; ++i) {
    d1 = derivative(d1);
    d0 = derivative(d0);
  }
  return d1 * a0 - a1 * d0;
}

}  // namespace

UniPoly f_poly(long j, Var v) { return f_u(j).with_var(v); }
UniPoly g_poly(long j, Var v) { return g_u(j).with_var(v); }
UniPoly phi(long k, Var v) { return phi_u(k).with_var(v); }
UniPoly psi(long k, Var v) { return (phi_u(k + 1) - phi_u(k - 1)).with_var(v); }
UniPoly big_f(long n, Var v) { return combo(f_u(n + 1), f_u(n), 1).with_var(v); }
UniPoly big_g(long n, Var v) { return combo(g_u(n + 1), g_u(n), 1).with_var(v); }
UniPoly big_h(long n, Var v) { return combo(g_u(n + 1), g_u(n), 2).with_var(v); }
UniPoly delta(long k, Var v) { return combo(phi_u(k + 1), phi_u(k - 1), 1).with_var(v); }

UniPoly sequence(SeqTag tag, long index, Var v) {
  switch (tag) {
    case SeqTag::F: return f_poly(index, v);
    case SeqTag::G: return g_poly(index, v);
    case SeqTag::PHI: return phi(index, v);
    case SeqTag::PSI: return psi(index, v);
    case SeqTag::DELTA: return delta(index, v);
    case SeqTag::BIGG: return big_g(index, v);
    case SeqTag::BIGF: return big_f(index, v);
    case SeqTag::BIGH: return big_h(index, v);
  }
  return UniPoly(v);
}

std::vector<IdentityResult> identity_suite(long range) {
  const UniPoly u = UniPoly::gen(Var::u);
  auto c = [](long v) { return UniPoly(mpz_class(v), Var::u); };
  const UniPoly one = c(1);

  std::vector<IdentityResult> out;
  auto run = [&](const std::string& name, long lo, long hi, const std::function<bool(long)>& holds) {
    IdentityResult r{name, true, std::nullopt, 0};
    for (long i = lo; i <= hi; ++i) {
      ++r.checked;
      if (!holds(i)) {
        r.pass = false;
        r.counterexample = i;
        break;
      }
    }
    out.push_back(std::move(r));
  };

  const long R = range;
  run("f product", -R, R, [&](long j) { return f_u(j - 1) * f_u(j + 1) == f_u(j) * f_u(j) - one; });
  run("g product", -R, R,
      [&](long j) { return g_u(j) * g_u(j + 1) == (u - c(2)) * f_u(j) * f_u(j) + one; });
  run("phi recurrence", -R, R, [&](long k) { return phi_u(k + 2) == u * phi_u(k) - phi_u(k - 2); });
  run("psi recurrence", -R, R, [&](long k) { return psi(k + 2) == u * psi(k) - psi(k - 2); });
  run("unit combination", -R, R,
      [&](long j) { return f_u(j - 1) * g_u(j - 1) - f_u(j - 2) * g_u(j) == one; });
  run("g quadratic form", -R, R, [&](long n) {
    const UniPoly a = g_u(n), b = g_u(n + 1);
    return b * b + a * a - u * a * b == c(2) - u;
  });
  run("G quadratic form", -R, R, [&](long n) {
    const UniPoly a = g_u(n), b = g_u(n + 1);
    return (c(4) - u * u) * big_g(n) == c(2 * n + 1) * a * a + c(2 * n - 1) * b * b - c(2 * n) * u * a * b;
  });
  run("G square difference", -R, R, [&](long n) {
    const UniPoly a = g_u(n), b = g_u(n + 1);
    return (c(4) - u * u) * big_g(n) == a * a - b * b - c(2 * n) * (u - c(2));
  });
  run("F square difference", -R, R, [&](long n) {
    const UniPoly a = f_u(n), b = f_u(n + 1);
    return (u * u - c(4)) * big_f(n) == b * b - a * a - c(2 * n + 1);
  });
  run("G via f", -R, R, [&](long n) { return (u + c(2)) * big_g(n) == f_u(2 * n) + c(2 * n); });
  run("H relation", -R, R, [&](long n) {
    UniPoly lhs = (u - c(2)) * (u + c(2)) * (u + c(2)) * big_h(n);
    UniPoly rhs = c(n - 1) * f_u(2 * n + 1) + f_u(2 * n) - c(n + 1) * f_u(2 * n - 1) - c(n) * u + c(2 * n);
    return lhs == c(2) * rhs;
  });

  run("f reflection", -R, R, [&](long j) { return f_u(-j) == -f_u(j); });
  run("g reflection", -R, R, [&](long j) { return g_u(-j) == g_u(j + 1); });
  run("f degree", -R, R, [&](long j) { return j == 0 ? f_u(j).is_zero() : f_u(j).degree() == std::abs(j) - 1; });
  run("g degree", -R, R, [&](long j) { return g_u(j).degree() == (j > 0 ? j - 1 : -j); });
  run("values at 2", -R, R, [&](long j) {
    return eval<mpz_class>(f_u(j), mpz_class(2)) == j && eval<mpz_class>(g_u(j), mpz_class(2)) == 1;
  });
  run("phi parity", -R, R, [&](long k) {
    return phi_u(k) == ((k + 1) % 2 == 0 ? phi_u(-k) : UniPoly(-phi_u(-k)));
  });
  run("phi degree", -R, R, [&](long k) {
    if (k == 0) return phi_u(0).is_zero();
    return phi_u(k).degree() == (std::abs(k) - 1) / 2;
  });
  run("psi even and odd", -R, R, [&](long j) {
    return psi(2 * j) == (u - c(2)) * f_u(j) && psi(2 * j - 1) == g_u(j);
  });
  run("delta split", -R, R, [&](long m) {
    return delta(2 * m) == big_g(m) && delta(2 * m + 1) == big_f(m);
  });
  run("G values at 2 and -2", -R, R, [&](long n) {
    mpz_class at2 = eval<mpz_class>(big_g(n), mpz_class(2));
    mpz_class atm2 = eval<mpz_class>(big_g(n), mpz_class(-2));
    return at2 == n && 3 * atm2 == mpz_class(n) * (4 * n * n - 1);
  });
  run("G and F leading coefficients", -R, R, [&](long n) {
    const UniPoly G = big_g(n), F = big_f(n);
    bool g_ok = G.is_zero() ? n == 0 : abs(G.lead()) == 1;
    bool f_ok = F.is_zero() ? (n == 0 || n == -1) : abs(F.lead()) == 1;
    return g_ok && f_ok;
  });
  run("coprime neighbours", -R, R, [&](long j) {
    auto unit = [](const UniPoly& a, const UniPoly& b) {
      if (a.is_zero()) return b.degree() == 0 && abs(b.lead()) == 1;
      if (b.is_zero()) return a.degree() == 0 && abs(a.lead()) == 1;
      return poly_gcd(a, b).degree() == 0 && abs(resultant(a, b)) == 1;
    };
    if (!unit(f_u(j), f_u(j - 1))) return false;
    if (!unit(phi_u(j + 1), phi_u(j - 1))) return false;
    if (j != 0 && !unit(psi(j), phi_u(j - 1))) return false;
    return true;
  });
  run("laurent form of f", -R, R, [&](long j) {
    if (j == 0) return f_u(0).is_zero();
    // s^N f_j(s + 1/s) (s^2 - 1) with N = |j| - 1
    const UniPoly s = UniPoly::gen(Var::s);
    const UniPoly sq1 = pow(s, 2) + UniPoly(mpz_class(1), Var::s);
    const UniPoly fj = f_u(j);
    const int N = std::abs(j) - 1;
    UniPoly acc(Var::s);
    for (int i = 0; i <= fj.degree(); ++i)
      acc += pow(sq1, i).shifted(N - i) * fj.coeffs()[i];
    UniPoly lhs = acc * (pow(s, 2) - UniPoly(mpz_class(1), Var::s));
    UniPoly s2j = pow(s, 2 * static_cast<unsigned>(std::abs(j)));
    UniPoly one_s(mpz_class(1), Var::s);
    return lhs == (j > 0 ? s2j - one_s : one_s - s2j);
  });
  return out;
}

}  // namespace bv
