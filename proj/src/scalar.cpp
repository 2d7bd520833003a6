#include "motivzeta/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "motivzeta/errors.hpp"
#include "motivzeta/lexer.hpp"

namespace motivzeta {

// ---- LaurentPoly ----

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, std::int64_t e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

std::int64_t LaurentPoly::degree() const { return terms_.back().first; }
std::int64_t LaurentPoly::low_degree() const { return terms_.front().first; }
const BigInt& LaurentPoly::lead() const { return terms_.back().second; }

BigInt LaurentPoly::coeff(std::int64_t e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, std::int64_t x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<LaurentPoly::Term> merge_add(const std::vector<LaurentPoly::Term>& a,
                                         const std::vector<LaurentPoly::Term>& b, bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate_b ? BigInt(-b[j].second) : b[j].second);
      ++j;
    } else {
      BigInt c = negate_b ? BigInt(a[i].second - b[j].second) : BigInt(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge_add(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge_add(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& m = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& o = a.terms_.size() == 1 ? b : a;
    LaurentPoly r;
    r.terms_.reserve(o.terms_.size());
    for (const auto& t : o.terms_)
      r.terms_.emplace_back(t.first + m.terms_[0].first, t.second * m.terms_[0].second);
    return r;
  }
  std::map<std::int64_t, BigInt> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.first + y.first] += x.second * y.second;
  LaurentPoly r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1), b = *this;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  return g;
}

BigRat LaurentPoly::eval(const BigRat& x) const {
  if (terms_.empty()) return 0;
  if (x == 0 && low_degree() < 0) throw DivisionByZero("negative power of L evaluated at 0");
  BigRat r = 0;
  for (const auto& t : terms_) {
    BigRat p = 1;
    BigRat base = t.first >= 0 ? x : BigRat(1) / x;
    std::int64_t e = t.first >= 0 ? t.first : -t.first;
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    p.canonicalize();
    r += p * BigRat(t.second);
  }
  return r;
}

int compare(const LaurentPoly& a, const LaurentPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first ? -1 : 1;
    int c = cmp(a.terms_[i].second, b.terms_[i].second);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

std::string LaurentPoly::str(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const BigInt& c = it->second;
    std::int64_t e = it->first;
    bool neg = c < 0;
    BigInt a = abs(c);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---- dense integer polynomials ----

namespace {

void trim(DenseZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt dense_content(const DenseZ& a) {
  BigInt g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void divide_content(DenseZ& a, const BigInt& g) {
  if (g == 0 || g == 1) return;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

DenseZ pseudo_rem(DenseZ a, const DenseZ& b) {
  const BigInt& lb = b.back();
  std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    BigInt la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

DenseZ div_exact(DenseZ a, const DenseZ& b) {
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  DenseZ q(a.size() - db, 0);
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return q;
}

DenseZ to_dense(const LaurentPoly& p, std::int64_t shift) {
  DenseZ d;
  for (const auto& [e, c] : p.terms()) {
    std::size_t i = static_cast<std::size_t>(e - shift);
    if (d.size() <= i) d.resize(i + 1, 0);
    d[i] = c;
  }
  return d;
}

LaurentPoly from_dense(const DenseZ& d, std::int64_t shift) {
  std::vector<LaurentPoly::Term> t;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) t.emplace_back(static_cast<std::int64_t>(i) + shift, d[i]);
  return LaurentPoly::from_terms(std::move(t));
}

}  // namespace

DenseZ dense_gcd(DenseZ a, DenseZ b) {
  trim(a);
  trim(b);
  if (a.empty() && b.empty()) return {};
  BigInt c = dense_content(a);
  BigInt cb = dense_content(b);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  divide_content(a, dense_content(a));
  divide_content(b, dense_content(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    DenseZ r = pseudo_rem(a, b);
    divide_content(r, dense_content(r));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.size() == 1) return {c};
  for (auto& x : a) x *= c;
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

// ---- ScalarValue ----

ScalarValue::ScalarValue(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  normalize();
}

void ScalarValue::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  std::int64_t e = den_.low_degree();
  if (e != 0) {
    num_ = num_.shifted(-e);
    den_ = den_.shifted(-e);
  }
  if (den_.is_constant()) {
    BigInt c = den_.lead();
    BigInt g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (c < 0) g = -g;
    if (g != 1) {
      std::vector<LaurentPoly::Term> t = num_.terms();
      for (auto& x : t) mpz_divexact(x.second.get_mpz_t(), x.second.get_mpz_t(), g.get_mpz_t());
      num_ = LaurentPoly::from_terms(std::move(t));
      BigInt cd;
      mpz_divexact(cd.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      den_ = LaurentPoly(cd);
    }
    return;
  }
  std::int64_t a = num_.low_degree();
  DenseZ A = to_dense(num_, a);
  DenseZ D = to_dense(den_, 0);
  DenseZ G = dense_gcd(A, D);
  if (!(G.size() == 1 && G[0] == 1)) {
    A = div_exact(std::move(A), G);
    D = div_exact(std::move(D), G);
  }
  if (D.back() < 0) {
    for (auto& x : A) x = -x;
    for (auto& x : D) x = -x;
  }
  num_ = from_dense(A, a);
  den_ = from_dense(D, 0);
}

bool ScalarValue::is_one() const { return is_laurent() && num_ == LaurentPoly(1); }
bool ScalarValue::is_laurent() const { return den_ == LaurentPoly(1); }

ScalarValue ScalarValue::operator-() const {
  ScalarValue r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarValue& ScalarValue::operator+=(const ScalarValue& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

ScalarValue& ScalarValue::operator-=(const ScalarValue& o) { return *this += -o; }

ScalarValue& ScalarValue::operator*=(const ScalarValue& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

ScalarValue& ScalarValue::operator/=(const ScalarValue& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero scalar");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

ScalarValue ScalarValue::pow(long n) const {
  if (n < 0) return ScalarValue(1) / pow(-n);
  ScalarValue r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

BigRat ScalarValue::eval(const BigRat& x) const {
  BigRat d = den_.eval(x);
  if (d == 0) throw DivisionByZero("denominator vanishes at evaluation point");
  return num_.eval(x) / d;
}

bool operator<(const ScalarValue& a, const ScalarValue& b) {
  int c = compare(a.num_, b.num_);
  if (c != 0) return c < 0;
  return compare(a.den_, b.den_) < 0;
}

std::string ScalarValue::str(char var, bool atomic) const {
  std::string n = num_.str(var);
  if (is_laurent()) {
    if (atomic && num_.terms().size() > 1) return "(" + n + ")";
    return n;
  }
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.str(var);
  if (den_.terms().size() > 1) d = "(" + d + ")";
  std::string s = n + "/" + d;
  return atomic ? "(" + s + ")" : s;
}

namespace {

ScalarValue parse_expr(TokenStream& ts, char var);

ScalarValue parse_primary(TokenStream& ts, char var) {
  const Token& t = ts.peek();
  if (t.kind == Token::Int) return ScalarValue(LaurentPoly(ts.expect_int()));
  if (t.kind == Token::Ident && t.text == std::string(1, var)) {
    ts.next();
    return ScalarValue::L(1);
  }
  if (ts.accept('(')) {
    ScalarValue v = parse_expr(ts, var);
    ts.expect(')');
    return v;
  }
  if (ts.accept('-')) return -parse_primary(ts, var);
  ts.fail(std::string("expected number, '") + var + "' or '('");
}

ScalarValue parse_factor(TokenStream& ts, char var) {
  ScalarValue v = parse_primary(ts, var);
  if (ts.accept('^')) v = v.pow(ts.expect_small_int());
  return v;
}

ScalarValue parse_term(TokenStream& ts, char var) {
  ScalarValue v = parse_factor(ts, var);
  for (;;) {
    if (ts.accept('*'))
      v *= parse_factor(ts, var);
    else if (ts.accept('/'))
      v /= parse_factor(ts, var);
    else
      return v;
  }
}

ScalarValue parse_expr(TokenStream& ts, char var) {
  bool neg = ts.accept('-');
  if (!neg) ts.accept('+');
  ScalarValue v = parse_term(ts, var);
  if (neg) v = -v;
  for (;;) {
    if (ts.accept('+'))
      v += parse_term(ts, var);
    else if (ts.accept('-'))
      v -= parse_term(ts, var);
    else
      return v;
  }
}

}  // namespace

ScalarValue ScalarValue::parse(TokenStream& ts, char var) { return parse_expr(ts, var); }

ScalarValue ScalarValue::parse(const std::string& src, char var) {
  TokenStream ts(src);
  ScalarValue v = parse_expr(ts, var);
  if (!ts.at_end()) ts.fail("expected end of input");
  return v;
}

ScalarValue scalar_arith(const ScalarValue& a, const ScalarValue& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return {};
}

// ---- TruncatedLSeries ----

TruncatedLSeries& TruncatedLSeries::operator+=(const TruncatedLSeries& o) {
  depth = std::min(depth, o.depth);
  complete = complete && o.complete;
  for (const auto& [e, c] : o.terms) terms[e] += c;
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first < -depth || it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  return *this;
}

std::string TruncatedLSeries::str(char var) const {
  std::vector<LaurentPoly::Term> t(terms.begin(), terms.end());
  std::string s = LaurentPoly::from_terms(t).str(var);
  if (!complete) s += " + O(" + std::string(1, var) + "^" + std::to_string(-depth - 1) + ")";
  return s;
}

TruncatedLSeries expand_geometric(std::int64_t c, std::int64_t depth) {
  if (c < 1) throw DivisionByZero("geometric ratio L^0");
  TruncatedLSeries s;
  s.depth = depth;
  s.complete = false;
  for (std::int64_t e = 0; e >= -depth; e -= c) s.terms[e] = 1;
  return s;
}

TruncatedLSeries to_lseries(const ScalarValue& v, std::int64_t depth) {
  TruncatedLSeries s;
  s.depth = depth;
  const LaurentPoly& N = v.num();
  const LaurentPoly& D = v.den();
  if (v.is_laurent()) {
    for (const auto& [e, c] : N.terms())
      if (e >= -depth) s.terms[e] = c;
    s.complete = N.is_zero() || N.low_degree() >= -depth;
    return s;
  }
  if (abs(D.lead()) != 1)
    throw UnsupportedExpansion("L-expansion needs a denominator with leading coefficient +-1");
  std::int64_t m = D.degree();
  std::int64_t K = std::max<std::int64_t>(0, N.degree() - m + depth);
  // q(y) = sum_j d_{m-j} y^j with y = 1/L; invert as a power series.
  std::vector<BigInt> q(static_cast<std::size_t>(m + 1), 0);
  for (const auto& [e, c] : D.terms()) q[static_cast<std::size_t>(m - e)] = c;
  std::vector<BigInt> r(static_cast<std::size_t>(K + 1), 0);
  const BigInt& q0 = q[0];
  for (std::int64_t j = 0; j <= K; ++j) {
    BigInt acc = j == 0 ? BigInt(1) : BigInt(0);
    for (std::int64_t i = 1; i <= std::min<std::int64_t>(j, m); ++i)
      acc -= q[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j - i)];
    r[static_cast<std::size_t>(j)] = acc * q0;  // q0 = +-1 is its own inverse
  }
  for (const auto& [e, c] : N.terms())
    for (std::int64_t j = 0; j <= K; ++j) {
      std::int64_t x = e - m - j;
      if (x < -depth) break;
      s.terms[x] += c * r[static_cast<std::size_t>(j)];
    }
  for (auto it = s.terms.begin(); it != s.terms.end();)
    it = it->second == 0 ? s.terms.erase(it) : std::next(it);
  s.complete = false;
  return s;
}

}  // namespace motivzeta
