#include "motivzeta/motive.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

#include "motivzeta/errors.hpp"

namespace motivzeta {

namespace {

ScalarValue torus_scalar(int d) {
  return ScalarValue(LaurentPoly::from_terms({{1, BigInt(1)}, {0, BigInt(-1)}})).pow(d);
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

bool same_sign(const BrieskornSpec& s) {
  for (const auto& t : s.terms())
    if (t.sign != s[0].sign) return false;
  return true;
}

// Odd elimination shared by ZeroSet and FiberSet:
//   [S] = sum_{j<a} (-1)^j (L-1)^{d-1-j} + (-1)^a [E]
// where a counts odd terms and E is the even part.
template <class Even>
ASClass eliminate_odd(const BrieskornSpec& s, Even even_class) {
  std::vector<BrieskornTerm> even;
  int a = 0;
  for (const auto& t : s.terms()) {
    if (t.k % 2)
      ++a;
    else
      even.push_back(t);
  }
  int d = static_cast<int>(s.dim());
  ScalarValue acc;
  for (int j = 0; j < a; ++j) {
    ScalarValue term = torus_scalar(d - 1 - j);
    if (j % 2)
      acc -= term;
    else
      acc += term;
  }
  ASClass rest = even_class(BrieskornSpec(std::move(even)));
  return a % 2 ? ASClass(acc) - rest : ASClass(acc) + rest;
}

}  // namespace

// ---------------------------------------------------------------------------
// ASGen / MotAtom ordering and text

bool operator<(const ASGen& a, const ASGen& b) {
  return std::tie(a.kind, a.spec, a.label, a.dim, a.poly) <
         std::tie(b.kind, b.spec, b.label, b.dim, b.poly);
}

bool operator==(const ASGen& a, const ASGen& b) {
  return a.kind == b.kind && a.spec == b.spec && a.label == b.label && a.dim == b.dim &&
         a.poly == b.poly;
}

std::string ASGen::str() const {
  switch (kind) {
    case ZeroSet:
      return "ZeroSet[" + spec.list_str() + "]";
    case FiberSet:
      return "FiberSet[" + spec.list_str() + "]";
    case Named:
      return "NamedAS(\"" + label + "\"," + std::to_string(dim) + ")";
    case PolyZero:
      return "PolyZero[\"" + poly.str() + "\"]";
    case PolyFiber:
      return "PolyFiber[\"" + poly.str() + "\"]";
  }
  return {};
}

bool operator<(const MotAtom& a, const MotAtom& b) {
  return std::tie(a.kind, a.k, a.sign, a.support, a.excl, a.label, a.dim, a.poly) <
         std::tie(b.kind, b.k, b.sign, b.support, b.excl, b.label, b.dim, b.poly);
}

bool operator==(const MotAtom& a, const MotAtom& b) {
  return a.kind == b.kind && a.k == b.k && a.sign == b.sign && a.support == b.support &&
         a.excl == b.excl && a.label == b.label && a.dim == b.dim && a.poly == b.poly;
}

std::string MotAtom::str() const {
  switch (kind) {
    case Mon:
      return "Mon(" + sign_char(sign) + "," + std::to_string(k) + ")";
    case Geom: {
      std::string s = "GeomTorus[" + support.list_str();
      bool first = true;
      for (unsigned m : excl) {
        if (m == full_mask()) continue;
        s += first ? ";" : ",";
        first = false;
        s += "{";
        bool f2 = true;
        for (unsigned i = 0; i < support.dim(); ++i)
          if (m >> i & 1u) {
            if (!f2) s += ",";
            f2 = false;
            s += std::to_string(i);
          }
        s += "}";
      }
      return s + "]";
    }
    case NamedEq:
      return "Named(\"" + label + "\"," + std::to_string(dim) + ")";
    case Face:
      return "Face[\"" + poly.str() + "\"]";
  }
  return {};
}

// ---------------------------------------------------------------------------
// ASClass

ASClass::ASClass(const ScalarValue& s) {
  if (!s.is_zero()) terms_[ASMono{}] = s;
}

void ASClass::add_term(const ASMono& m, const ScalarValue& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, s);
  if (fresh) return;
  it->second += s;
  if (it->second.is_zero()) terms_.erase(it);
}

ASClass ASClass::torus(int d) { return ASClass(torus_scalar(d)); }

bool ASClass::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ScalarValue ASClass::scalar() const {
  if (terms_.empty()) return ScalarValue();
  if (!is_scalar()) throw UnsupportedExpansion("class is not a pure scalar: " + str());
  return terms_.begin()->second;
}

ASClass ASClass::operator-() const {
  ASClass r = *this;
  for (auto& [m, s] : r.terms_) s = -s;
  return r;
}

ASClass& ASClass::operator+=(const ASClass& o) {
  for (const auto& [m, s] : o.terms_) add_term(m, s);
  return *this;
}

ASClass& ASClass::operator-=(const ASClass& o) {
  for (const auto& [m, s] : o.terms_) add_term(m, -s);
  return *this;
}

ASClass operator*(const ASClass& a, const ASClass& b) {
  ASClass r;
  for (const auto& [ma, sa] : a.terms_)
    for (const auto& [mb, sb] : b.terms_) {
      ASMono m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.add_term(m, sa * sb);
    }
  return r;
}

ASClass ASClass::scaled(const ScalarValue& s) const {
  if (s.is_zero()) return ASClass();
  ASClass r = *this;
  for (auto& [m, v] : r.terms_) v *= s;
  return r;
}

ASClass ASClass::zero_set(const BrieskornSpec& s) {
  if (s.empty()) return ASClass(1);
  if (s.has_odd()) return eliminate_odd(s, [](const BrieskornSpec& e) { return zero_set(e); });
  if (s.dim() == 1 || same_sign(s)) return ASClass();
  ASGen g;
  g.kind = ASGen::ZeroSet;
  g.spec = std::min(s, s.negated());
  ASClass r;
  r.terms_[ASMono{g}] = ScalarValue(1);
  return r;
}

ASClass ASClass::fiber_set(const BrieskornSpec& s, int value) {
  if (value != 1 && value != -1) throw InvalidGerm("fiber value must be +1 or -1");
  if (value < 0) return fiber_set(s.negated(), 1);
  if (s.empty()) return ASClass();
  if (s.has_odd())
    return eliminate_odd(s, [](const BrieskornSpec& e) { return fiber_set(e, 1); });
  bool all_neg = std::all_of(s.terms().begin(), s.terms().end(),
                             [](const BrieskornTerm& t) { return t.sign < 0; });
  if (all_neg) return ASClass();
  if (s.dim() == 1) return ASClass(2);
  ASGen g;
  g.kind = ASGen::FiberSet;
  g.spec = s;
  ASClass r;
  r.terms_[ASMono{g}] = ScalarValue(1);
  return r;
}

ASClass ASClass::named(const std::string& label, int dim) {
  ASGen g;
  g.kind = ASGen::Named;
  g.label = label;
  g.dim = dim;
  ASClass r;
  r.terms_[ASMono{g}] = ScalarValue(1);
  return r;
}

ASClass ASClass::poly_zero(const Poly& p) {
  if (p.is_zero()) throw InvalidGerm("zero set of the zero polynomial");
  Poly q = p.compressed();
  ScalarValue free = torus_scalar(static_cast<int>(p.nvars() - q.nvars()));
  if (q.nvars() == 0) return ASClass();  // nonzero constant
  if (q.terms().size() == 1) return ASClass();
  if (auto b = q.brieskorn_shape()) return zero_set(*b).scaled(free);
  // Zero set is unchanged by scaling; pick the primitive representative with the
  // smaller sign.
  BigInt c = 0;
  for (const auto& [e, v] : q.terms()) c = gcd(c, v);
  std::map<Exponent, BigInt> t;
  for (const auto& [e, v] : q.terms()) t[e] = v / c;
  Poly prim(q.vars(), std::move(t));
  ASGen g;
  g.kind = ASGen::PolyZero;
  g.poly = std::min(prim, prim.negated());
  ASClass r;
  r.terms_[ASMono{g}] = free;
  return r;
}

ASClass ASClass::poly_fiber(const Poly& p, int value) {
  if (value != 1 && value != -1) throw InvalidGerm("fiber value must be +1 or -1");
  if (value < 0) return poly_fiber(p.negated(), 1);
  Poly q = p.compressed();
  ScalarValue free = torus_scalar(static_cast<int>(p.nvars() - q.nvars()));
  if (q.nvars() == 0) return q.constant_term() == 1 ? ASClass(free) : ASClass();
  if (q.terms().size() == 1) {
    // c*x^nu = 1: a unimodular change of torus coordinates makes it c*y^g = 1.
    const auto& [e, c] = *q.terms().begin();
    int g = 0;
    for (int x : e) g = std::gcd(g, x);
    long roots = g % 2 ? 1 : (c > 0 ? 2 : 0);
    return ASClass(torus_scalar(static_cast<int>(q.nvars()) - 1) * ScalarValue(roots) * free);
  }
  if (auto b = q.brieskorn_shape()) return fiber_set(*b, 1).scaled(free);
  ASGen g;
  g.kind = ASGen::PolyFiber;
  g.poly = q;
  ASClass r;
  r.terms_[ASMono{g}] = free;
  return r;
}

// ---------------------------------------------------------------------------
// Geometric helpers

namespace {

bool laminar(const std::vector<unsigned>& ys) {
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      unsigned c = ys[i] & ys[j];
      if (c && c != ys[i] && c != ys[j]) return false;
    }
  return true;
}

unsigned union_of(const std::vector<unsigned>& ys) {
  unsigned u = 0;
  for (unsigned y : ys) u |= y;
  return u;
}

// Class of {f_N = 0 for all N in ys} inside the torus on `ambient`, for a laminar
// family ys of masks contained in ambient.
ASClass laminar_zero_product(const BrieskornSpec& sup, const std::vector<unsigned>& ys,
                             unsigned ambient) {
  if (!laminar(ys))
    throw UnsupportedExpansion("exclusion family is not laminar; intersection generator needed");
  ASClass r(1);
  for (unsigned n : ys) {
    unsigned covered = 0;
    for (unsigned c : ys)
      if (c != n && (c & n) == c) covered |= c;
    r = r * ASClass::zero_set(sup.subset(n & ~covered));
    if (r.is_zero()) return r;
  }
  int free = std::popcount(ambient & ~union_of(ys));
  return r.scaled(torus_scalar(free));
}

// ZS(S; X): class of {f_S = 0, f_E != 0 for E in X}, S the full mask.
ASClass zero_with_exclusions(const BrieskornSpec& sup, const std::vector<unsigned>& excl) {
  unsigned full = (1u << sup.dim()) - 1u;
  ASClass r;
  std::size_t n = excl.size();
  for (unsigned y = 0; y < (1u << n); ++y) {
    std::vector<unsigned> ys{full};
    for (std::size_t i = 0; i < n; ++i)
      if (y >> i & 1u) ys.push_back(excl[i]);
    ASClass t = laminar_zero_product(sup, ys, full);
    if (std::popcount(y) % 2)
      r -= t;
    else
      r += t;
  }
  return r;
}

struct RawGeom {
  std::vector<BrieskornTerm> sup;
  std::vector<unsigned> excl;
};

MotAtom canonical_geom(const BrieskornSpec& sup, std::vector<unsigned> excl) {
  // Permutations inside blocks of equal terms give the same atom; keep the
  // lexicographically smallest sorted mask list.
  std::size_t d = sup.dim();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < d;) {
    std::size_t j = i;
    while (j < d && sup[j] == sup[i]) ++j;
    if (j - i > 1) blocks.push_back({i, j});
    i = j;
  }
  auto apply = [&](const std::vector<std::size_t>& p) {
    std::vector<unsigned> out;
    for (unsigned m : excl) {
      unsigned r = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (m >> i & 1u) r |= 1u << p[i];
      out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<unsigned> best = apply(perm);
  // Odometer over the block permutations.
  if (!blocks.empty() && excl.size() > 1) {
    for (;;) {
      std::size_t b = 0;
      for (; b < blocks.size(); ++b) {
        auto [lo, hi] = blocks[b];
        if (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                  perm.begin() + static_cast<std::ptrdiff_t>(hi)))
          break;
      }
      if (b == blocks.size()) break;
      best = std::min(best, apply(perm));
    }
  }
  MotAtom a;
  a.kind = MotAtom::Geom;
  a.support = sup;
  a.excl = std::move(best);
  return a;
}

MotClass single(const MotAtom& a) {
  MotClass r;
  r.add_term(MotMono{a}, ASClass(1));
  return r;
}

}  // namespace

std::vector<GeomStratum> geom_strata(const MotAtom& g) {
  if (g.kind != MotAtom::Geom) throw UnsupportedExpansion("geom_strata on a non-Geom atom");
  unsigned full = g.full_mask();
  std::vector<unsigned> inner;
  for (unsigned m : g.excl)
    if (m != full) inner.push_back(m);
  std::vector<GeomStratum> out;
  for (unsigned y = 0; y < (1u << inner.size()); ++y) {
    std::vector<unsigned> ys;
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (y >> i & 1u) ys.push_back(inner[i]);
    unsigned cov = union_of(ys);
    ASClass zeros = laminar_zero_product(g.support, ys, cov);
    if (zeros.is_zero()) continue;
    out.push_back({std::popcount(y) % 2 ? -1 : 1, std::move(zeros), g.support.subset(full & ~cov)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// MotClass

MotClass::MotClass(const ASClass& s) {
  if (!s.is_zero()) terms_[MotMono{}] = s;
}

MotClass::MotClass(const ScalarValue& s) : MotClass(ASClass(s)) {}

void MotClass::add_term(const MotMono& m, const ASClass& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MotClass MotClass::mon(int sign, int k) {
  if (sign != 1 && sign != -1) throw InvalidGerm("Mon sign must be +1 or -1");
  if (k < 1) throw InvalidGerm("Mon exponent must be positive");
  if (k % 2) return unit();  // R1: x -> sign*x^k is an equivariant bijection
  MotAtom a;
  a.kind = MotAtom::Mon;
  a.sign = sign;
  a.k = k;
  return single(a);
}

MotClass MotClass::geom(const std::vector<BrieskornTerm>& support,
                        const std::vector<unsigned>& excl) {
  std::size_t d = support.size();
  if (d == 0) throw InvalidGerm("GeomTorus with empty support");
  if (d > 24) throw UnsupportedDimension("GeomTorus support too large");
  unsigned full = (1u << d) - 1u;
  // Sort the support, remembering where each index went.
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  std::vector<std::size_t> pos(d);
  std::vector<BrieskornTerm> sorted;
  for (std::size_t i = 0; i < d; ++i) {
    pos[order[i]] = i;
    sorted.push_back(support[order[i]]);
  }
  BrieskornSpec sup(sorted);
  std::vector<unsigned> masks;
  for (unsigned m : excl) {
    if (m & ~full) throw InvalidGerm("exclusion mask outside the support");
    unsigned r = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (m >> i & 1u) r |= 1u << pos[i];
    if (std::popcount(r) < 2 || r == full) continue;
    // f_E != 0 is automatic when {f_E = 0} is empty on its torus.
    if (ASClass::zero_set(sup.subset(r)).is_zero()) continue;
    masks.push_back(r);
  }
  if (d >= 2) masks.push_back(full);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  if (d == 1) return mon(sup[0].sign, sup[0].k);
  if (sup.all_odd()) {
    // R2: the morphism is a trivial fibration over R*, the class is its fiber times unit.
    MotAtom tmp;
    tmp.kind = MotAtom::Geom;
    tmp.support = sup;
    tmp.excl = masks;
    ASClass fib;
    for (const auto& st : geom_strata(tmp)) {
      ASClass t = st.zeros * ASClass::fiber_set(st.rest, 1);
      if (st.sign > 0)
        fib += t;
      else
        fib -= t;
    }
    return MotClass(fib);
  }
  return single(canonical_geom(sup, std::move(masks)));
}

MotClass MotClass::named(const std::string& label, int dim) {
  MotAtom a;
  a.kind = MotAtom::NamedEq;
  a.label = label;
  a.dim = dim;
  return single(a);
}

MotClass MotClass::face(const Poly& p) {
  Poly q = p.compressed();
  if (q.nvars() == 0) throw InvalidGerm("face polynomial must be nonconstant");
  int n = static_cast<int>(q.nvars());
  if (q.terms().size() == 1) {
    const auto& [e, c] = *q.terms().begin();
    int g = 0;
    for (int x : e) g = std::gcd(g, x);
    return mon(sgn(c), g).scaled(torus_scalar(n - 1));
  }
  if (auto b = q.brieskorn_shape()) return geom(b->terms(), {});
  MotAtom a;
  a.kind = MotAtom::Face;
  a.poly = q;
  return single(a);
}

bool MotClass::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ASClass MotClass::scalar_part() const {
  auto it = terms_.find(MotMono{});
  return it == terms_.end() ? ASClass() : it->second;
}

MotClass MotClass::operator-() const {
  MotClass r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MotClass& MotClass::operator+=(const MotClass& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MotClass& MotClass::operator-=(const MotClass& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MotClass MotClass::scaled(const ASClass& s) const {
  MotClass r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

MotClass MotClass::scaled(const ScalarValue& s) const {
  MotClass r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.scaled(s));
  return r;
}

// ---------------------------------------------------------------------------
// Operations

namespace {

ASClass normalize_scalar(const ASClass& c) {
  ASClass r;
  for (const auto& [m, s] : c.terms()) {
    ASClass t(s);
    for (const ASGen& g : m) {
      switch (g.kind) {
        case ASGen::ZeroSet: t = t * ASClass::zero_set(g.spec); break;
        case ASGen::FiberSet: t = t * ASClass::fiber_set(g.spec, 1); break;
        case ASGen::Named: t = t * ASClass::named(g.label, g.dim); break;
        case ASGen::PolyZero: t = t * ASClass::poly_zero(g.poly); break;
        case ASGen::PolyFiber: t = t * ASClass::poly_fiber(g.poly, 1); break;
      }
    }
    r += t;
  }
  return r;
}

MotClass atom_class(const MotAtom& a) {
  switch (a.kind) {
    case MotAtom::Mon: return MotClass::mon(a.sign, a.k);
    case MotAtom::Geom: return MotClass::geom(a.support.terms(), a.excl);
    case MotAtom::NamedEq: return MotClass::named(a.label, a.dim);
    case MotAtom::Face: return MotClass::face(a.poly);
  }
  return {};
}

MotMono merge(const MotMono& a, const MotMono& b) {
  MotMono m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

ASClass forget_atom(const MotAtom& a) {
  switch (a.kind) {
    case MotAtom::Mon: return ASClass::torus(1);
    case MotAtom::Geom: {
      // Inclusion-exclusion over every exclusion, the full mask included.
      ASClass r;
      std::size_t n = a.excl.size();
      for (unsigned y = 0; y < (1u << n); ++y) {
        std::vector<unsigned> ys;
        for (std::size_t i = 0; i < n; ++i)
          if (y >> i & 1u) ys.push_back(a.excl[i]);
        ASClass t = laminar_zero_product(a.support, ys, a.full_mask());
        if (std::popcount(y) % 2)
          r -= t;
        else
          r += t;
      }
      return r;
    }
    case MotAtom::NamedEq: return ASClass::named(a.label, a.dim);
    case MotAtom::Face:
      return ASClass::torus(static_cast<int>(a.poly.nvars())) - ASClass::poly_zero(a.poly);
  }
  return {};
}

}  // namespace

MotClass normalize(const MotClass& x) {
  MotClass r;
  for (const auto& [m, c] : x.terms()) {
    MotClass t(normalize_scalar(c));
    for (const MotAtom& a : m) t = convolve(t, atom_class(a));
    r += t;
  }
  return r;
}

MotClass convolve(const MotClass& x, const MotClass& y) {
  MotClass r;
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) r.add_term(merge(ma, mb), ca * cb);
  return r;
}

MotClass multiply(const MotClass& x, const MotClass& y) {
  if (x.is_scalar()) return y.scaled(x.scalar_part());
  if (y.is_scalar()) return x.scaled(y.scalar_part());
  throw UnsupportedExpansion("fiber product of two non-scalar classes is not supported");
}

MotClass geometric_expand(const MotMono& m) {
  if (m.size() <= 1) {
    MotClass r;
    r.add_term(m, ASClass(1));
    return r;
  }
  // Each state is coefficient * (Geom or unit when nullopt).
  struct State {
    ASClass coeff;
    std::optional<RawGeom> g;
  };
  auto raw_of = [](const MotAtom& a) {
    RawGeom g;
    if (a.kind == MotAtom::Mon) {
      g.sup = {{a.sign, a.k}};
    } else if (a.kind == MotAtom::Geom) {
      g.sup = a.support.terms();
      g.excl = a.excl;
    } else {
      throw UnsupportedExpansion("geometric expansion needs Mon or GeomTorus atoms, got " + a.str());
    }
    return g;
  };
  std::vector<State> states{{ASClass(1), raw_of(m[0])}};
  for (std::size_t i = 1; i < m.size(); ++i) {
    RawGeom b = raw_of(m[i]);
    std::vector<State> next;
    for (auto& st : states) {
      if (!st.g) {
        next.push_back({st.coeff, b});
        continue;
      }
      const RawGeom& a = *st.g;
      RawGeom u;
      u.sup = a.sup;
      u.sup.insert(u.sup.end(), b.sup.begin(), b.sup.end());
      unsigned shift = static_cast<unsigned>(a.sup.size());
      u.excl = a.excl;
      for (unsigned e : b.excl) u.excl.push_back(e << shift);
      // Z_2 part: zero locus of the sum, with the old exclusions still in force.
      std::vector<unsigned> old = u.excl;
      u.excl.push_back((1u << u.sup.size()) - 1u);
      ASClass z2;
      {
        // BrieskornSpec sorts its terms; remap the masks to that order.
        std::size_t d = u.sup.size();
        std::vector<std::size_t> order(d);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return u.sup[x] < u.sup[y]; });
        std::vector<std::size_t> pos(d);
        for (std::size_t k = 0; k < d; ++k) pos[order[k]] = k;
        std::vector<unsigned> remapped;
        for (unsigned msk : old) {
          unsigned r = 0;
          for (std::size_t k = 0; k < d; ++k)
            if (msk >> k & 1u) r |= 1u << pos[k];
          remapped.push_back(r);
        }
        z2 = zero_with_exclusions(BrieskornSpec(u.sup), remapped);
      }
      next.push_back({-st.coeff, std::move(u)});
      if (!z2.is_zero()) next.push_back({st.coeff * z2, std::nullopt});
    }
    states = std::move(next);
  }
  MotClass r;
  for (const auto& st : states) {
    if (st.g)
      r += MotClass::geom(st.g->sup, st.g->excl).scaled(st.coeff);
    else
      r += MotClass(st.coeff);
  }
  return r;
}

ASClass forget(const MotClass& x) {
  ASClass r;
  for (const auto& [m, c] : x.terms()) {
    if (m.empty()) {
      r += c * ASClass::torus(1);
    } else if (m.size() == 1) {
      r += c * forget_atom(m[0]);
    } else {
      MotClass e = geometric_expand(m);
      for (const auto& [em, ec] : e.terms()) {
        ASClass f = em.empty() ? ASClass::torus(1) : forget_atom(em[0]);
        r += c * ec * f;
      }
    }
  }
  return r;
}

}  // namespace motivzeta
