#include "motivzeta/realroots.hpp"

#include <algorithm>

#include "motivzeta/errors.hpp"

namespace motivzeta {

QPoly::QPoly(std::vector<BigRat> c) : c_(std::move(c)) { trim(); }

QPoly QPoly::constant(const BigRat& a) { return QPoly(std::vector<BigRat>{a}); }
QPoly QPoly::x() { return QPoly(std::vector<BigRat>{0, 1}); }

QPoly QPoly::from_dense(const DenseZ& d) {
  std::vector<BigRat> c(d.begin(), d.end());
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(c));
}

QPoly QPoly::scaled(const BigRat& s) const {
  std::vector<BigRat> c = c_;
  for (auto& v : c) v *= s;
  return QPoly(std::move(c));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRat> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(c));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(BigRat(1) / lead());
}

BigRat QPoly::eval(const BigRat& x) const {
  BigRat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<BigRat> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  BigRat inv = BigRat(1) / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    BigRat c = r[static_cast<std::size_t>(i)] * inv;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BigRat inv = BigRat(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.monic();
  QPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

int sign_of(const BigRat& v) { return sgn(v); }

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(p.derivative());
  while (!seq.back().is_zero()) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const BigRat& x) {
  int last = 0, v = 0;
  for (const auto& q : seq) {
    int s = sign_of(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int sign_variations_inf(const std::vector<QPoly>& seq, bool plus) {
  int last = 0, v = 0;
  for (const auto& q : seq) {
    if (q.is_zero()) continue;
    int s = sign_of(q.lead());
    if (!plus && (q.degree() % 2 == 1)) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int count_roots(const std::vector<QPoly>& seq, const BigRat& a, const BigRat& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

BigRat root_bound(const QPoly& p) {
  BigRat m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigRat r = abs(p[static_cast<std::size_t>(i)] / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

RealAlg RealAlg::rational(const BigRat& v) {
  RealAlg a;
  a.exact = true;
  a.value = v;
  a.lo = a.hi = v;
  a.p = QPoly(std::vector<BigRat>{-v, 1});
  return a;
}

void RealAlg::refine() {
  if (exact) return;
  BigRat mid = (lo + hi) / 2;
  if (p.eval(mid) == 0) {
    exact = true;
    value = mid;
    lo = hi = mid;
    p = QPoly(std::vector<BigRat>{-mid, 1});
    sturm = sturm_sequence(p);
    return;
  }
  if (count_roots(sturm, lo, mid) == 1)
    hi = mid;
  else
    lo = mid;
}

void RealAlg::reset_poly(const QPoly& q) {
  if (exact) return;
  p = squarefree_part(q);
  sturm = sturm_sequence(p);
}

std::vector<RealAlg> real_roots(const QPoly& poly) {
  if (poly.is_zero()) throw DegenerateInput("real_roots of the zero polynomial");
  std::vector<RealAlg> out;
  if (poly.degree() == 0) return out;
  QPoly p = squarefree_part(poly);
  std::vector<QPoly> seq = sturm_sequence(p);
  BigRat B = root_bound(p);
  // Stack of half-open intervals (a, b] with known root counts.
  struct Job {
    BigRat a, b;
    int n;
  };
  std::vector<Job> stack{{-B, B, count_roots(seq, -B, B)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.n == 0) continue;
    if (j.n == 1) {
      RealAlg r;
      r.p = p;
      r.sturm = seq;
      if (p.eval(j.b) == 0) {
        r = RealAlg::rational(j.b);
        r.sturm = sturm_sequence(r.p);
      } else {
        // Only root of p in the open interval; j.a may itself be a root owned by
        // the neighbouring interval, which the (lo, hi] Sturm counts exclude.
        r.lo = j.a;
        r.hi = j.b;
      }
      out.push_back(std::move(r));
      continue;
    }
    BigRat mid = (j.a + j.b) / 2;
    int left = count_roots(seq, j.a, mid);
    stack.push_back({mid, j.b, j.n - left});
    stack.push_back({j.a, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const RealAlg& x, const RealAlg& y) { return x.midpoint() < y.midpoint(); });
  return out;
}

int sign_at(RealAlg& a, const QPoly& q) {
  if (a.exact) return sign_of(q.eval(a.value));
  if (q.is_zero()) return 0;
  // q(alpha) = 0 iff gcd(p, q) has a root in the isolating interval.
  QPoly g = gcd(a.p, q);
  if (g.degree() >= 1 && count_roots(sturm_sequence(g), a.lo, a.hi) > 0) return 0;
  std::vector<QPoly> qseq = sturm_sequence(squarefree_part(q));
  while (!a.exact && count_roots(qseq, a.lo, a.hi) > 0) a.refine();
  if (a.exact) return sign_of(q.eval(a.value));
  return sign_of(q.eval(a.midpoint()));
}

}  // namespace motivzeta
