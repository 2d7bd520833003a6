#include "motivzeta/class_expr.hpp"

#include "motivzeta/errors.hpp"
#include "motivzeta/lexer.hpp"

namespace motivzeta {

namespace {

std::string atoms_str(const MotMono& m, std::size_t from = 0) {
  if (m.size() == from) return "unit";
  if (m.size() == from + 1) return m[from].str();
  return "conv(" + m[from].str() + "," + atoms_str(m, from + 1) + ")";
}

// A scalar is printed negated (after a " - ") when its leading numerator
// coefficient is negative.
bool negative(const ScalarValue& s) { return s.num().lead() < 0; }

// Body of one term, without its sign; `rest` is the product of generators and atoms.
std::string term_body(const ScalarValue& mag, const std::string& rest) {
  if (mag.is_one()) return rest;
  return mag.str('L', true) + "*" + rest;
}

void append_term(std::string& out, const ScalarValue& s, const std::string& rest) {
  bool neg = negative(s);
  std::string body = term_body(neg ? -s : s, rest);
  if (out.empty())
    out = (neg ? "-" : "") + body;
  else
    out += (neg ? " - " : " + ") + body;
}

std::string gens_str(const ASMono& m) {
  std::string s;
  for (const auto& g : m) {
    if (!s.empty()) s += "*";
    s += g.str();
  }
  return s;
}

}  // namespace

std::string ASClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, s] : terms_) {
    if (m.empty()) {
      bool neg = negative(s);
      std::string body = (neg ? -s : s).str('L', true);
      out += out.empty() ? (neg ? "-" : "") + body : (neg ? " - " : " + ") + body;
    } else {
      append_term(out, s, gens_str(m));
    }
  }
  return out;
}

std::string to_string(const MotClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : x.terms()) {
    std::string atoms = atoms_str(mono);
    for (const auto& [gens, s] : coeff.terms()) {
      std::string rest = gens.empty() ? atoms : gens_str(gens) + "*" + atoms;
      append_term(out, s, rest);
    }
  }
  return out;
}

namespace {

std::optional<ScalarValue> pure_scalar(const MotClass& x) {
  if (!x.is_scalar()) return std::nullopt;
  ASClass c = x.scalar_part();
  if (!c.is_scalar()) return std::nullopt;
  return c.scalar();
}

MotClass parse_expr(TokenStream& ts);

BrieskornSpec parse_spec_list(TokenStream& ts) {
  std::vector<BrieskornTerm> t;
  do {
    int sign = 0;
    if (ts.accept('+'))
      sign = 1;
    else if (ts.accept('-'))
      sign = -1;
    else
      ts.fail("expected '+' or '-'");
    if (ts.peek().kind != Token::Int) ts.fail("expected an exponent");
    long k = ts.expect_small_int();
    if (k < 1 || k > 100000) ts.fail("exponent out of range");
    t.push_back({sign, static_cast<int>(k)});
  } while (ts.accept(','));
  return BrieskornSpec(std::move(t));
}

std::string parse_string_arg(TokenStream& ts) {
  if (ts.peek().kind != Token::String) ts.fail("expected a quoted string");
  return ts.next().text;
}

Poly parse_quoted_poly(TokenStream& ts) {
  const Token& t = ts.peek();
  std::string src = parse_string_arg(ts);
  try {
    return Poly::parse(src);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in quoted polynomial: ") + e.what(), t.line, t.column);
  }
}

int parse_dim(TokenStream& ts) {
  long d = ts.expect_small_int();
  if (d < 0 || d > 1000) ts.fail("dimension out of range");
  return static_cast<int>(d);
}

MotClass parse_primary(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Token::Int) return MotClass(ScalarValue(LaurentPoly(ts.expect_int())));
  if (ts.accept('(')) {
    MotClass v = parse_expr(ts);
    ts.expect(')');
    return v;
  }
  if (t.kind != Token::Ident) ts.fail("expected a class expression");
  std::string id = t.text;
  if (id == "L") {
    ts.next();
    return MotClass(ScalarValue::L(1));
  }
  if (id == "unit") {
    ts.next();
    return MotClass::unit();
  }
  if (id == "Mon") {
    ts.next();
    ts.expect('(');
    int sign = 0;
    if (ts.accept('+'))
      sign = 1;
    else if (ts.accept('-'))
      sign = -1;
    else
      ts.fail("expected '+' or '-'");
    ts.expect(',');
    long k = ts.expect_small_int();
    if (k < 1 || k > 100000) ts.fail("exponent out of range");
    ts.expect(')');
    return MotClass::mon(sign, static_cast<int>(k));
  }
  if (id == "ZeroSet" || id == "FiberSet") {
    ts.next();
    ts.expect('[');
    BrieskornSpec s = parse_spec_list(ts);
    ts.expect(']');
    return MotClass(id == "ZeroSet" ? ASClass::zero_set(s) : ASClass::fiber_set(s, 1));
  }
  if (id == "GeomTorus") {
    ts.next();
    ts.expect('[');
    BrieskornSpec s = parse_spec_list(ts);
    std::vector<unsigned> masks;
    if (ts.accept(';')) {
      do {
        ts.expect('{');
        unsigned m = 0;
        do {
          long i = ts.expect_small_int();
          if (i < 0 || i >= static_cast<long>(s.dim())) ts.fail("index outside the support");
          m |= 1u << i;
        } while (ts.accept(','));
        ts.expect('}');
        masks.push_back(m);
      } while (ts.accept(','));
    }
    ts.expect(']');
    return MotClass::geom(s.terms(), masks);
  }
  if (id == "Named" || id == "NamedAS") {
    ts.next();
    ts.expect('(');
    std::string label = parse_string_arg(ts);
    ts.expect(',');
    int dim = parse_dim(ts);
    ts.expect(')');
    return id == "Named" ? MotClass::named(label, dim) : MotClass(ASClass::named(label, dim));
  }
  if (id == "Face" || id == "PolyZero" || id == "PolyFiber") {
    ts.next();
    ts.expect('[');
    Poly p = parse_quoted_poly(ts);
    ts.expect(']');
    if (id == "Face") return MotClass::face(p);
    return MotClass(id == "PolyZero" ? ASClass::poly_zero(p) : ASClass::poly_fiber(p, 1));
  }
  if (id == "conv") {
    ts.next();
    ts.expect('(');
    MotClass a = parse_expr(ts);
    ts.expect(',');
    MotClass b = parse_expr(ts);
    ts.expect(')');
    return convolve(a, b);
  }
  throw ParseError("unknown identifier '" + id + "'", t.line, t.column);
}

MotClass parse_factor(TokenStream& ts) {
  MotClass v = parse_primary(ts);
  if (!ts.accept('^')) return v;
  const Token& at = ts.peek();
  long n = ts.expect_small_int();
  if (auto s = pure_scalar(v)) return MotClass(s->pow(n));
  if (n < 0) throw ParseError("negative power of a non-scalar class", at.line, at.column);
  MotClass r = MotClass::unit();
  for (long i = 0; i < n; ++i) r = multiply(r, v);
  return r;
}

MotClass parse_term(TokenStream& ts) {
  MotClass v = parse_factor(ts);
  for (;;) {
    if (ts.accept('*')) {
      v = multiply(v, parse_factor(ts));
    } else if (ts.is_punct('/')) {
      ts.next();
      MotClass d = parse_factor(ts);
      auto s = pure_scalar(d);
      if (!s) throw UnsupportedExpansion("division by a non-scalar class");
      if (s->is_zero()) throw DivisionByZero("division by zero in class expression");
      v = v.scaled(ScalarValue(1) / *s);
    } else {
      return v;
    }
  }
}

MotClass parse_expr(TokenStream& ts) {
  MotClass acc;
  if (ts.accept('-'))
    acc = -parse_term(ts);
  else {
    ts.accept('+');
    acc = parse_term(ts);
  }
  for (;;) {
    if (ts.accept('+'))
      acc += parse_term(ts);
    else if (ts.accept('-'))
      acc -= parse_term(ts);
    else
      return acc;
  }
}

}  // namespace

MotClass parse_class(TokenStream& ts) { return parse_expr(ts); }

MotClass parse_class(const std::string& src) {
  TokenStream ts(src);
  if (ts.at_end()) ts.fail("expected a class expression");
  MotClass v = parse_expr(ts);
  if (!ts.at_end()) ts.fail("unexpected token");
  return v;
}

}  // namespace motivzeta
