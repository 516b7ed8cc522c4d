#include "bridgevar/polytext.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bv {

namespace {

void append_term(std::string& out, mpz_class c, const std::string& mono) {
  bool neg = sgn(c) < 0;
  if (neg) c = -c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? "-" : "+";
  }
  if (mono.empty()) {
    out += c.get_str();
  } else if (c == 1) {
    out += mono;
  } else {
    out += c.get_str() + "*" + mono;
  }
}

std::string power_str(char v, int e) {
  if (e == 0) return "";
  std::string s(1, v);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

// Sparse multivariate intermediate used by the parser.
using Monomial = std::map<char, int>;
using Sparse = std::map<Monomial, mpz_class>;

Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

Sparse add(Sparse a, const Sparse& b, int sign) {
  for (const auto& [m, c] : b) a[m] += sign > 0 ? mpz_class(c) : mpz_class(-c);
  for (auto it = a.begin(); it != a.end();) it = sgn(it->second) == 0 ? a.erase(it) : std::next(it);
  return a;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Sparse parse() {
    Sparse v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sparse expr() {
    Sparse acc;
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    acc = add(acc, term(), sign);
    for (;;) {
      if (eat('+')) acc = add(acc, term(), 1);
      else if (eat('-')) acc = add(acc, term(), -1);
      else return acc;
    }
  }

  Sparse term() {
    Sparse acc = factor();
    while (eat('*')) acc = mul(acc, factor());
    return acc;
  }

  Sparse factor() {
    Sparse base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      Sparse out{{Monomial{}, mpz_class(1)}};
      for (int i = 0; i < e; ++i) out = mul(out, base);
      return out;
    }
    return base;
  }

  Sparse atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      Sparse out;
      if (sgn(v) != 0) out[Monomial{}] = v;
      return out;
    }
    Var var;
    if (parse_var(c, var)) {
      ++pos_;
      return Sparse{{Monomial{{c, 1}}, mpz_class(1)}};
    }
    fail(std::string("unknown symbol '") + c + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

bool parse_var(char c, Var& out) {
  switch (c) {
    case 'u': out = Var::u; return true;
    case 'r': out = Var::r; return true;
    case 't': out = Var::t; return true;
    case 'y': out = Var::y; return true;
    case 'x': out = Var::x; return true;
    case 'S': out = Var::S; return true;
    default: return false;
  }
}

std::string to_string(const mpz_class& c) { return c.get_str(); }

std::string to_string(const mpq_class& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i)
    if (sgn(p.coeffs()[i]) != 0) append_term(out, p.coeffs()[i], power_str(var_char(p.var()), i));
  return out;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const mpq_class& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    std::string mono = power_str(var_char(p.var()), i);
    if (c.get_den() == 1) {
      append_term(out, c.get_num(), mono);
    } else {
      mpq_class a = abs(c);
      out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? "-" : "+");
      out += to_string(a);
      if (!mono.empty()) out += "*" + mono;
    }
  }
  return out;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const UniPoly& c = p.coeffs()[i];
    for (int j = c.degree(); j >= 0; --j) {
      if (sgn(c.coeffs()[j]) == 0) continue;
      std::string a = power_str(var_char(p.var()), i);
      std::string b = power_str(var_char(c.var()), j);
      std::string mono = a.empty() ? b : (b.empty() ? a : a + "*" + b);
      append_term(out, c.coeffs()[j], mono);
    }
  }
  return out;
}

UniPoly parse_unipoly(const std::string& text, Var fallback) {
  Sparse s = Parser(text).parse();
  char name = 0;
  for (const auto& [m, c] : s)
    for (const auto& [v, e] : m) {
      if (name && v != name) throw std::invalid_argument("more than one variable in univariate polynomial");
      name = v;
    }
  Var var = fallback;
  if (name) parse_var(name, var);
  std::vector<mpz_class> coeffs;
  for (const auto& [m, c] : s) {
    int e = m.empty() ? 0 : m.begin()->second;
    if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1);
    coeffs[e] += c;
  }
  return UniPoly(std::move(coeffs), var);
}

BiPoly parse_bipoly(const std::string& text, Var outer, Var inner) {
  Sparse s = Parser(text).parse();
  std::vector<std::vector<mpz_class>> grid;
  for (const auto& [m, c] : s) {
    int eo = 0, ei = 0;
    for (const auto& [v, e] : m) {
      if (v == var_char(outer)) eo = e;
      else if (v == var_char(inner)) ei = e;
      else throw std::invalid_argument(std::string("unexpected variable '") + v + "'");
    }
    if (static_cast<int>(grid.size()) <= eo) grid.resize(eo + 1);
    if (static_cast<int>(grid[eo].size()) <= ei) grid[eo].resize(ei + 1);
    grid[eo][ei] += c;
  }
  std::vector<UniPoly> coeffs;
  for (auto& row : grid) coeffs.emplace_back(std::move(row), inner);
  return BiPoly(std::move(coeffs), outer);
}

}  // namespace bv
