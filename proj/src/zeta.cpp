#include "motivzeta/zeta.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "motivzeta/class_expr.hpp"
#include "motivzeta/errors.hpp"

namespace motivzeta {

namespace {

// Number of flattened scalar*generators*atoms terms.
std::size_t flat_terms(const MotClass& x) {
  std::size_t n = 0;
  for (const auto& [m, c] : x.terms()) n += c.terms().size();
  return n;
}

// Appends `coeff * rest` to out with " + " / " - " joining. `rest` may be empty.
void append_coeff(std::string& out, const MotClass& coeff, const std::string& rest) {
  std::string cs = to_string(coeff);
  bool neg = false;
  if (flat_terms(coeff) > 1) {
    cs = "(" + cs + ")";
  } else if (!cs.empty() && cs[0] == '-') {
    neg = true;
    cs = cs.substr(1);
  }
  std::string body = rest.empty() ? cs : cs + "*" + rest;
  if (out.empty())
    out = (neg ? "-" : "") + body;
  else
    out += (neg ? " - " : " + ") + body;
}

std::string t_power(std::int64_t n) {
  if (n == 1) return "T";
  return "T^" + std::to_string(n);
}

std::string x_text(const SrFactor& f, char var) {
  std::string s;
  if (f.nu != 0) {
    s += var;
    s += "^" + std::to_string(-f.nu) + "*";
  }
  return s + t_power(f.N);
}

std::string factor_text(const SrFactor& f) {
  std::string x = x_text(f, 'L');
  return f.i_form ? "[" + x + "/(1 - " + x + ")]" : "[1/(1 - " + x + ")]";
}

ScalarValue pure_l(std::int64_t c) {
  // 1/(1 - L^{-c}) = L^c/(L^c - 1)
  LaurentPoly lc = LaurentPoly::monomial(1, c);
  return ScalarValue(lc, lc - LaurentPoly(1));
}

// Scalar series of the factor product, coefficients at T^0..order.
std::vector<ScalarValue> factor_series(const std::vector<SrFactor>& fs, int order,
                                       const std::function<ScalarValue(std::int64_t)>& weight) {
  std::vector<ScalarValue> s(static_cast<std::size_t>(order) + 1);
  s[0] = ScalarValue(1);
  for (const auto& f : fs) {
    std::vector<ScalarValue> t(s.size());
    ScalarValue x = weight(f.nu);
    // Series of the factor: sum_{j >= j0} x^j T^{jN}.
    std::vector<std::pair<std::int64_t, ScalarValue>> g;
    ScalarValue xp = f.i_form ? x : ScalarValue(1);
    for (std::int64_t j = f.i_form ? 1 : 0; j * f.N <= order; ++j) {
      g.push_back({j * f.N, xp});
      xp *= x;
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (s[a].is_zero()) continue;
      for (const auto& [e, v] : g) {
        std::size_t b = a + static_cast<std::size_t>(e);
        if (b >= t.size()) break;
        t[b] += s[a] * v;
      }
    }
    s = std::move(t);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// ZetaSeries

ZetaSeries ZetaSeries::truncated(int order) const {
  if (order > this->order()) throw TruncationMismatch("cannot extend a truncated series");
  ZetaSeries r(order);
  for (int n = 1; n <= order; ++n) r[n] = (*this)[n];
  return r;
}

ZetaSeries ZetaSeries::operator-() const {
  ZetaSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZetaSeries& ZetaSeries::operator+=(const ZetaSeries& o) {
  if (o.order() != order()) throw TruncationMismatch("series orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

std::string ZetaSeries::str() const {
  std::string out;
  for (int n = 1; n <= order(); ++n)
    if (!(*this)[n].is_zero()) append_coeff(out, (*this)[n], t_power(n));
  if (out.empty()) out = "0";
  return out + " + O(" + t_power(order() + 1) + ")";
}

// ---------------------------------------------------------------------------
// RationalZeta

void RationalZeta::add(SrTerm t) {
  std::sort(t.factors.begin(), t.factors.end());
  std::sort(t.pureL.begin(), t.pureL.end());
  if (t.coeff.is_zero()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->tshift == t.tshift && it->factors == t.factors && it->pureL == t.pureL) {
      it->coeff += t.coeff;
      if (it->coeff.is_zero()) terms_.erase(it);
      return;
    }
  }
  terms_.push_back(std::move(t));
}

std::string RationalZeta::str() const {
  std::string out;
  for (const auto& t : terms_) {
    std::string rest;
    auto join = [&rest](const std::string& s) { rest += rest.empty() ? s : "*" + s; };
    if (t.tshift) join(t_power(t.tshift));
    for (const auto& f : t.factors) join(factor_text(f));
    for (auto c : t.pureL) join("[1/(1 - L^-" + std::to_string(c) + ")]");
    append_coeff(out, t.coeff, rest);
  }
  return out.empty() ? "0" : out;
}

std::int64_t RationalZeta::comparison_order() const {
  std::int64_t maxn = 1, nf = 1, shift = 0;
  for (const auto& t : terms_) {
    for (const auto& f : t.factors) maxn = std::max(maxn, f.N);
    nf = std::max<std::int64_t>(nf, static_cast<std::int64_t>(t.factors.size()));
    shift = std::max(shift, t.tshift);
  }
  return 2 * maxn * nf + 1 + shift;
}

ZetaSeries expand(const RationalZeta& r, int order) {
  ZetaSeries z(order);
  for (const auto& t : r.terms()) {
    if (t.tshift > order) continue;
    int room = order - static_cast<int>(t.tshift);
    auto s = factor_series(t.factors, room, [](std::int64_t nu) { return ScalarValue::L(-nu); });
    ScalarValue pl(1);
    for (auto c : t.pureL) pl *= pure_l(c);
    for (int k = 0; k <= room; ++k) {
      int n = k + static_cast<int>(t.tshift);
      if (n < 1 || s[static_cast<std::size_t>(k)].is_zero()) continue;
      z[n] += t.coeff.scaled(s[static_cast<std::size_t>(k)] * pl);
    }
  }
  return z;
}

ZetaSeries hadamard(const ZetaSeries& a, const ZetaSeries& b) {
  if (a.order() != b.order()) throw TruncationMismatch("hadamard needs equal truncation orders");
  ZetaSeries r(a.order());
  for (int n = 1; n <= a.order(); ++n) r[n] = convolve(a[n], b[n]);
  return r;
}

ZetaSeries naive_of(const ZetaSeries& z) {
  ZetaSeries r(z.order());
  for (int n = 1; n <= z.order(); ++n) r[n] = MotClass(forget(z[n]));
  return r;
}

ZetaSeries modified_transform(const ZetaSeries& z, TransformDir dir) {
  ZetaSeries r(z.order());
  ASClass run;
  for (int n = 1; n <= z.order(); ++n) {
    if (dir == TransformDir::toModified) {
      // Z~_n = Z_n - 1 + sum_{i<=n} forget(Z_i)
      run += forget(z[n]);
      r[n] = z[n] + MotClass(run - ASClass(1));
    } else {
      // Z_n = Z~_n + L^{-n} (1 - sum_{i<=n} forget(Z~_i) L^{i-1})
      run += forget(z[n]).scaled(ScalarValue::L(n - 1));
      r[n] = z[n] + MotClass((ASClass(1) - run).scaled(ScalarValue::L(-n)));
    }
  }
  return r;
}

MotClass limit_at_infinity(const RationalZeta& r) {
  MotClass out;
  for (const auto& t : r.terms()) {
    std::int64_t jdeg = 0;
    std::size_t nI = 0;
    ScalarValue lead(1);
    for (const auto& f : t.factors) {
      if (f.i_form) {
        ++nI;
      } else {
        jdeg += f.N;
        lead *= -ScalarValue::L(f.nu);  // 1/(1 - x) ~ -x^{-1}
      }
    }
    if (t.tshift > jdeg)
      throw NotInSrForm("term " + std::to_string(t.tshift) + " grows at T = infinity");
    if (t.tshift < jdeg) continue;
    for (auto c : t.pureL) lead *= pure_l(c);
    if (nI % 2) lead = -lead;
    out += t.coeff.scaled(lead);
  }
  return out;
}

MilnorFiber milnor_from_limit(const RationalZeta& z) { return {-limit_at_infinity(z)}; }

bool rational_equal(const RationalZeta& a, const RationalZeta& b) {
  int order = static_cast<int>(std::max(a.comparison_order(), b.comparison_order()));
  return expand(a, order) == expand(b, order);
}

RationalZeta hadamard_rational(const RationalZeta& a, const RationalZeta& b) {
  auto check = [](const SrTerm& t) {
    if (t.tshift || !t.pureL.empty() || t.factors.size() != 1 || !t.factors[0].i_form)
      throw NotInSrForm("hadamard_rational needs single I-form terms");
  };
  RationalZeta r;
  for (const auto& x : a.terms()) {
    check(x);
    for (const auto& y : b.terms()) {
      check(y);
      const SrFactor& f = x.factors[0];
      const SrFactor& g = y.factors[0];
      std::int64_t l = std::lcm(f.N, g.N);
      SrTerm t;
      t.coeff = convolve(x.coeff, y.coeff);
      t.factors = {{f.nu * (l / f.N) + g.nu * (l / g.N), l, true}};
      r.add(std::move(t));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Realizations

const char* invariant_name(Invariant v) { return v == Invariant::chi_c ? "chi_c" : "beta"; }

namespace {

ScalarValue from_rat(const BigRat& q) {
  return ScalarValue(LaurentPoly(BigInt(q.get_num())), LaurentPoly(BigInt(q.get_den())));
}

ScalarValue realize_scalar(const ScalarValue& s, Invariant v) {
  return v == Invariant::chi_c ? from_rat(s.eval(BigRat(-1))) : s;
}

ScalarValue factor_weight(std::int64_t nu, Invariant v) {
  if (v == Invariant::beta) return ScalarValue::L(-nu);
  return ScalarValue(nu % 2 ? -1 : 1);
}

}  // namespace

Realized realize(const MotClass& x, Invariant v, Functor f) {
  if (v == Invariant::chi_c) return from_rat(chi_F(x, f));
  return beta_realize(x, f);
}

std::vector<Realized> realize_series(const ZetaSeries& z, Invariant v, Functor f) {
  std::vector<Realized> out;
  for (int n = 1; n <= z.order(); ++n) out.push_back(realize(z[n], v, f));
  return out;
}

std::string realized_str(const Realized& x, Invariant v) {
  return x.str(v == Invariant::chi_c ? 'L' : 'u');
}

RealizedRational realize_rational(const RationalZeta& r, Invariant v, Functor f) {
  RealizedRational out;
  out.inv = v;
  for (const auto& t : r.terms()) {
    RealizedTerm rt;
    rt.coeff = realize(t.coeff, v, f);
    for (auto c : t.pureL) rt.coeff *= realize_scalar(pure_l(c), v);
    rt.tshift = t.tshift;
    rt.factors = t.factors;
    if (rt.coeff.is_zero()) continue;
    // Merge with an identical shape.
    bool merged = false;
    for (auto it = out.terms.begin(); it != out.terms.end(); ++it) {
      if (it->tshift == rt.tshift && it->factors == rt.factors) {
        it->coeff += rt.coeff;
        if (it->coeff.is_zero()) out.terms.erase(it);
        merged = true;
        break;
      }
    }
    if (!merged) out.terms.push_back(std::move(rt));
  }
  return out;
}

std::vector<Realized> RealizedRational::expand(int order) const {
  std::vector<Realized> out(static_cast<std::size_t>(order));
  for (const auto& t : terms) {
    if (t.tshift > order) continue;
    int room = order - static_cast<int>(t.tshift);
    Invariant v = inv;
    auto s = factor_series(t.factors, room, [v](std::int64_t nu) { return factor_weight(nu, v); });
    for (int k = 0; k <= room; ++k) {
      int n = k + static_cast<int>(t.tshift);
      if (n < 1) continue;
      out[static_cast<std::size_t>(n - 1)] += t.coeff * s[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

std::string RealizedRational::str() const {
  std::string out;
  for (const auto& t : terms) {
    ScalarValue c = t.coeff;
    std::string rest;
    auto join = [&rest](const std::string& s) { rest += rest.empty() ? s : "*" + s; };
    if (t.tshift) join(t_power(t.tshift));
    for (const auto& f : t.factors) {
      if (inv == Invariant::beta) {
        std::string x = x_text(f, 'u');
        join(f.i_form ? "[" + x + "/(1 - " + x + ")]" : "[1/(1 - " + x + ")]");
        continue;
      }
      std::string x = t_power(f.N);
      bool odd = f.nu % 2 != 0;
      std::string den = odd ? "(1 + " + x + ")" : "(1 - " + x + ")";
      // (-T^N)/(1 + T^N): the sign of the numerator moves into the coefficient.
      if (f.i_form && odd) c = -c;
      join(f.i_form ? "[" + x + "/" + den + "]" : "[1/" + den + "]");
    }
    bool neg = c.num().lead() < 0;
    if (neg) c = -c;
    std::string cs = c.is_one() && !rest.empty() ? "" : realized_str(c, inv);
    if (!cs.empty() && (c.num().terms().size() > 1 || !c.is_laurent())) cs = "(" + cs + ")";
    std::string body = cs.empty() ? rest : (rest.empty() ? cs : cs + "*" + rest);
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace motivzeta
