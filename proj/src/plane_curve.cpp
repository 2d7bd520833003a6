// Exact chi_c of sign regions of a plane curve inside the torus (R*)^2.
//
// The x-axis is cut at the real roots of x * lc_y(f) * Res_y(f, f_y) * f(x, 0).
// Over every open cell the fiber is constant and contributes -chi(fiber); over
// every critical point x = alpha != 0 the fiber contributes chi(fiber). Fibers over
// algebraic points are handled in Q[x]/(p) with exact signs at alpha.

#include <algorithm>
#include <array>
#include <functional>

#include "motivzeta/errors.hpp"
#include "motivzeta/realization.hpp"
#include "motivzeta/realroots.hpp"

namespace motivzeta {

namespace {

// Polynomial in y whose coefficients live in Q[x]/(m).
using YPoly = std::vector<QPoly>;

struct Field {
  QPoly m;
  std::function<int(const QPoly&)> sign;  // sign of an element at the chosen point

  QPoly reduce(const QPoly& q) const { return m.degree() >= 1 ? rem(q, m) : q; }
};

void trim(YPoly& p, const Field& k) {
  while (!p.empty() && k.sign(p.back()) == 0) p.pop_back();
}

YPoly derivative(const YPoly& p) {
  YPoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j].scaled(BigRat(static_cast<long>(j))));
  return d;
}

// Sturm chain over the field; pseudo-remainders carry a sign correction so that
// every member is a positive multiple of the classical one.
std::vector<YPoly> sturm_chain(const YPoly& f, const Field& k) {
  std::vector<YPoly> seq{f};
  YPoly d = derivative(f);
  for (auto& c : d) c = k.reduce(c);
  trim(d, k);
  if (d.empty()) return seq;
  seq.push_back(d);
  for (;;) {
    const YPoly& a = seq[seq.size() - 2];
    const YPoly& b = seq.back();
    if (b.size() <= 1) break;
    YPoly r = a;
    const QPoly& lb = b.back();
    int lb_sign = k.sign(lb);
    int steps = 0;
    while (r.size() >= b.size()) {
      QPoly lr = r.back();
      std::size_t shift = r.size() - b.size();
      for (auto& c : r) c = k.reduce(c * lb);
      for (std::size_t j = 0; j < b.size(); ++j) r[j + shift] = k.reduce(r[j + shift] - lr * b[j]);
      r.pop_back();
      trim(r, k);
      ++steps;
    }
    if (r.empty()) break;
    bool flip = (lb_sign < 0 && steps % 2 == 1);
    for (auto& c : r) c = flip ? c : -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_at_y(const YPoly& p, const BigRat& y, const Field& k) {
  QPoly acc;
  BigRat pw = 1;
  for (const auto& c : p) {
    acc = acc + c.scaled(pw);
    pw *= y;
  }
  return k.sign(k.reduce(acc));
}

int variations(const std::vector<YPoly>& seq, const BigRat& y, const Field& k) {
  int v = 0, last = 0;
  for (const auto& s : seq) {
    int sg = sign_at_y(s, y, k);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

int variations_inf(const std::vector<YPoly>& seq, bool plus, const Field& k) {
  int v = 0, last = 0;
  for (const auto& s : seq) {
    int sg = k.sign(s.back());
    if (!plus && (s.size() - 1) % 2) sg = -sg;
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

// chi_c of {y in R* : F(y) = 0}, {F > 0}, {F < 0}.
std::array<long, 3> fiber_chi(YPoly f, const Field& k) {
  for (auto& c : f) c = k.reduce(c);
  trim(f, k);
  if (f.empty()) return {-2, 0, 0};
  if (f.size() == 1) {
    int s = k.sign(f[0]);
    return {0, s > 0 ? -2 : 0, s < 0 ? -2 : 0};
  }
  // G = y*F has 0 among its roots, so isolating G isolates all breakpoints.
  YPoly g{QPoly()};
  g.insert(g.end(), f.begin(), f.end());
  std::vector<YPoly> seq = sturm_chain(g, k);
  int total = variations_inf(seq, false, k) - variations_inf(seq, true, k);
  auto is_root = [&](const BigRat& y) { return sign_at_y(g, y, k) == 0; };

  BigRat bound = 1;
  while (is_root(bound) || is_root(-bound) ||
         variations(seq, -bound, k) - variations(seq, bound, k) != total)
    bound *= 2;

  struct Iv {
    BigRat a, b;
  };
  std::vector<Iv> isolated;
  std::vector<Iv> stack{{-bound, bound}};
  while (!stack.empty()) {
    Iv iv = stack.back();
    stack.pop_back();
    int n = variations(seq, iv.a, k) - variations(seq, iv.b, k);
    if (n == 0) continue;
    if (n == 1) {
      isolated.push_back(iv);
      continue;
    }
    // A split point that is not a root; at most deg(G) candidates fail.
    BigRat q;
    for (long den = 2;; ++den) {
      bool found = false;
      for (long num = 1; num < den && !found; ++num) {
        q = iv.a + (iv.b - iv.a) * BigRat(num, den);
        q.canonicalize();
        found = !is_root(q);
      }
      if (found) break;
    }
    stack.push_back({q, iv.b});
    stack.push_back({iv.a, q});
  }
  std::sort(isolated.begin(), isolated.end(), [](const Iv& x, const Iv& y) { return x.a < y.a; });

  long zero = static_cast<long>(isolated.size()) - 1;
  long pos = 0, neg = 0;
  auto tally = [&](const BigRat& y) {
    int s = sign_at_y(f, y, k);
    if (s > 0) --pos;
    if (s < 0) --neg;
  };
  tally(isolated.front().a);
  for (const auto& iv : isolated) tally(iv.b);
  if (zero + pos + neg != -2) throw ValidationFailure("fiber regions do not partition R*");
  return {zero, pos, neg};
}

long pick(const std::array<long, 3>& v, Region r) {
  return r == Region::zero ? v[0] : r == Region::pos ? v[1] : v[2];
}

// Determinant over Q by Gaussian elimination.
BigRat det(std::vector<std::vector<BigRat>> a) {
  std::size_t n = a.size();
  BigRat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      BigRat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

// Res_y(f, g) for f, g given by coefficient lists of formal degrees n, m.
BigRat sylvester(const std::vector<BigRat>& f, const std::vector<BigRat>& g) {
  std::size_t n = f.size() - 1, m = g.size() - 1, s = n + m;
  if (s == 0) return 1;
  std::vector<std::vector<BigRat>> a(s, std::vector<BigRat>(s, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) a[i][i + j] = f[n - j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) a[m + i][i + j] = g[m - j];
  return det(a);
}

// Newton interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<BigRat>& xs, std::vector<BigRat> ys) {
  std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly r;
  for (std::size_t i = n; i-- > 0;) r = r * QPoly(std::vector<BigRat>{-xs[i], 1}) + QPoly::constant(ys[i]);
  return r;
}

QPoly resultant_f_fy(const YPoly& f) {
  std::size_t n = f.size() - 1;
  int dx = 0;
  for (const auto& c : f) dx = std::max(dx, c.degree());
  std::size_t samples = 2 * n * static_cast<std::size_t>(std::max(dx, 0)) + 1;
  std::vector<BigRat> xs, ys;
  for (std::size_t t = 0; t < samples; ++t) {
    BigRat x(static_cast<long>(t));
    std::vector<BigRat> fv, gv;
    for (const auto& c : f) fv.push_back(c.eval(x));
    for (std::size_t j = 1; j <= n; ++j) gv.push_back(f[j].eval(x) * BigRat(static_cast<long>(j)));
    xs.push_back(x);
    ys.push_back(sylvester(fv, gv));
  }
  return interpolate(xs, ys);
}

}  // namespace

long plane_curve_oracle(const Poly& f, Region r) {
  if (f.is_zero()) throw DegenerateInput("plane curve oracle needs a nonzero polynomial");
  if (f.nvars() > 2) throw UnsupportedDimension("plane curve oracle handles at most 2 variables");
  if (f.nvars() == 0) {
    int s = sgn(f.constant_term());
    return r == Region::zero ? 0 : (r == Region::pos) == (s > 0) ? 1 : 0;
  }
  if (f.nvars() == 1) {
    YPoly p;
    for (const auto& [e, c] : f.terms()) {
      std::size_t k = static_cast<std::size_t>(e[0]);
      if (p.size() <= k) p.resize(k + 1);
      p[k] = QPoly::constant(BigRat(c));
    }
    Field q{QPoly(), [](const QPoly& a) { return a.is_zero() ? 0 : sign_of(a[0]); }};
    return pick(fiber_chi(p, q), r);
  }
  // Coefficients of y^j as polynomials in x (first variable).
  YPoly fy;
  for (const auto& [e, c] : f.terms()) {
    std::size_t j = static_cast<std::size_t>(e[1]);
    if (fy.size() <= j) fy.resize(j + 1);
    std::vector<BigRat> mono(static_cast<std::size_t>(e[0]) + 1, 0);
    mono.back() = BigRat(c);
    fy[j] = fy[j] + QPoly(mono);
  }
  QPoly proj = QPoly::x() * fy.back();
  if (fy.size() >= 2) {
    QPoly res = resultant_f_fy(fy);
    if (res.is_zero()) throw DegenerateInput("polynomial is not square-free in y: " + f.str());
    proj = proj * res;
  }
  if (!fy[0].is_zero()) proj = proj * fy[0];
  std::vector<RealAlg> roots = real_roots(proj);
  for (auto& a : roots)
    if (!a.exact && sign_at(a, QPoly::x()) == 0) a = RealAlg::rational(0);

  auto rational_fiber = [&](const BigRat& x) {
    QPoly m(std::vector<BigRat>{-x, 1});
    Field k{m, [](const QPoly& a) { return a.is_zero() ? 0 : sign_of(a[0]); }};
    return pick(fiber_chi(fy, k), r);
  };

  long chi = 0;
  // Open cells.
  auto upper = [](const RealAlg& a) { return a.exact ? a.value : a.hi; };
  auto lower = [](const RealAlg& a) { return a.exact ? a.value : a.lo; };
  chi -= rational_fiber(lower(roots.front()) - 1);
  chi -= rational_fiber(upper(roots.back()) + 1);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (!(upper(roots[i]) < lower(roots[i + 1]))) {
      roots[i].refine();
      roots[i + 1].refine();
    }
    chi -= rational_fiber((upper(roots[i]) + lower(roots[i + 1])) / 2);
  }
  // Critical fibers off the axis x = 0.
  for (auto& a : roots) {
    if (a.exact) {
      if (a.value != 0) chi += rational_fiber(a.value);
      continue;
    }
    Field k{a.p, [&a](const QPoly& q) { return sign_at(a, q); }};
    chi += pick(fiber_chi(fy, k), r);
  }
  return chi;
}

}  // namespace motivzeta
