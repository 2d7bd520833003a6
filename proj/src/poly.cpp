#include "motivzeta/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "motivzeta/errors.hpp"
#include "motivzeta/lexer.hpp"

namespace motivzeta {

namespace {

// Parser-side representation with named variables.
using NamedMono = std::map<std::string, int>;
using NamedPoly = std::map<NamedMono, BigInt>;

void add_into(NamedPoly& a, const NamedPoly& b, int sign) {
  for (const auto& [m, c] : b) {
    BigInt& slot = a[m];
    slot += sign > 0 ? c : BigInt(-c);
    if (slot == 0) a.erase(m);
  }
}

NamedPoly mul(const NamedPoly& a, const NamedPoly& b) {
  NamedPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      NamedMono m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      BigInt& slot = r[m];
      slot += ca * cb;
      if (slot == 0) r.erase(m);
    }
  return r;
}

bool valid_var(const std::string& s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); });
}

NamedPoly parse_expr(TokenStream& ts);

NamedPoly parse_primary(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Token::Int) return NamedPoly{{NamedMono{}, ts.expect_int()}};
  if (t.kind == Token::Ident) {
    if (!valid_var(t.text)) ts.fail("invalid variable name");
    std::string v = ts.next().text;
    return NamedPoly{{NamedMono{{v, 1}}, BigInt(1)}};
  }
  if (ts.accept('(')) {
    NamedPoly p = parse_expr(ts);
    ts.expect(')');
    return p;
  }
  ts.fail("expected a number, a variable or '('");
}

NamedPoly parse_factor(TokenStream& ts) {
  NamedPoly p = parse_primary(ts);
  if (ts.accept('^')) {
    if (ts.peek().kind != Token::Int) ts.fail("expected a nonnegative integer exponent");
    BigInt e = ts.expect_int();
    if (e > 1000) ts.fail("exponent too large");
    NamedPoly r{{NamedMono{}, BigInt(1)}};
    for (long i = 0; i < e.get_si(); ++i) r = mul(r, p);
    p = r;
  }
  return p;
}

NamedPoly parse_term(TokenStream& ts) {
  NamedPoly p = parse_factor(ts);
  while (ts.accept('*')) p = mul(p, parse_factor(ts));
  return p;
}

NamedPoly parse_expr(TokenStream& ts) {
  NamedPoly acc;
  int sign = 1;
  if (ts.accept('-'))
    sign = -1;
  else
    ts.accept('+');
  add_into(acc, parse_term(ts), sign);
  for (;;) {
    if (ts.accept('+'))
      add_into(acc, parse_term(ts), 1);
    else if (ts.accept('-'))
      add_into(acc, parse_term(ts), -1);
    else
      return acc;
  }
}

}  // namespace

Poly::Poly(std::vector<std::string> vars, std::map<Exponent, BigInt> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

Poly Poly::parse(const std::string& src) {
  TokenStream ts(src);
  if (ts.at_end()) ts.fail("expected a polynomial");
  NamedPoly np = parse_expr(ts);
  if (!ts.at_end()) ts.fail("unexpected token");
  std::set<std::string> names;
  for (const auto& [m, c] : np)
    for (const auto& [v, e] : m)
      if (e != 0) names.insert(v);
  std::vector<std::string> vars(names.begin(), names.end());
  std::map<Exponent, BigInt> terms;
  for (const auto& [m, c] : np) {
    Exponent ex(vars.size(), 0);
    for (const auto& [v, e] : m) {
      if (e == 0) continue;
      ex[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin())] = e;
    }
    terms[ex] += c;
  }
  return Poly(std::move(vars), std::move(terms));
}

Poly Poly::from_brieskorn(const BrieskornSpec& s) {
  std::vector<std::string> vars;
  std::map<Exponent, BigInt> terms;
  for (std::size_t i = 0; i < s.dim(); ++i) vars.push_back("x" + std::to_string(i + 1));
  // Names x1..x9 sort correctly; beyond that pad so the order is preserved.
  if (s.dim() >= 10)
    for (std::size_t i = 0; i < s.dim(); ++i) {
      std::string n = std::to_string(i + 1);
      vars[i] = "x" + std::string(3 - n.size(), '0') + n;
    }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Exponent e(s.dim(), 0);
    e[i] = s[i].k;
    terms[e] = s[i].sign;
  }
  return Poly(std::move(vars), std::move(terms));
}

BigInt Poly::constant_term() const {
  auto it = terms_.find(Exponent(vars_.size(), 0));
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::optional<BrieskornSpec> Poly::brieskorn_shape() const {
  if (terms_.empty()) return std::nullopt;
  std::vector<bool> used(vars_.size(), false);
  std::vector<BrieskornTerm> t;
  for (const auto& [e, c] : terms_) {
    int var = -1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (var >= 0) return std::nullopt;
      var = static_cast<int>(i);
    }
    if (var < 0 || used[static_cast<std::size_t>(var)]) return std::nullopt;
    used[static_cast<std::size_t>(var)] = true;
    t.push_back({sgn(c), e[static_cast<std::size_t>(var)]});
  }
  return BrieskornSpec(std::move(t));
}

std::optional<BrieskornSpec> Poly::brieskorn() const {
  for (const auto& [e, c] : terms_)
    if (abs(c) != 1) return std::nullopt;
  return brieskorn_shape();
}

Poly Poly::restricted(const std::vector<Exponent>& keep) const {
  std::map<Exponent, BigInt> t;
  for (const auto& e : keep) {
    auto it = terms_.find(e);
    if (it != terms_.end()) t[e] = it->second;
  }
  return Poly(vars_, std::move(t));
}

Poly Poly::compressed() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        keep.push_back(i);
        break;
      }
  std::vector<std::string> vars;
  for (auto i : keep) vars.push_back(vars_[i]);
  std::map<Exponent, BigInt> t;
  for (const auto& [e, c] : terms_) {
    Exponent x;
    for (auto i : keep) x.push_back(e[i]);
    t[x] = c;
  }
  return Poly(std::move(vars), std::move(t));
}

Poly Poly::negated() const {
  std::map<Exponent, BigInt> t = terms_;
  for (auto& [e, c] : t) c = -c;
  return Poly(vars_, std::move(t));
}

Poly Poly::plus_constant(const BigInt& c) const {
  std::map<Exponent, BigInt> t = terms_;
  t[Exponent(vars_.size(), 0)] += c;
  return Poly(vars_, std::move(t));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    BigInt a = abs(c);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
  }
  return os.str();
}

}  // namespace motivzeta
