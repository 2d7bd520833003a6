#include "motivzeta/realization.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "motivzeta/errors.hpp"

namespace motivzeta {

const char* functor_name(Functor f) {
  switch (f) {
    case Functor::forget: return "forget";
    case Functor::Fplus: return "plus";
    case Functor::Fminus: return "minus";
    case Functor::Fpos: return "pos";
    case Functor::Fneg: return "neg";
  }
  return "?";
}

namespace {

long pow_m2(std::size_t d) {
  long r = 1;
  for (std::size_t i = 0; i < d; ++i) r *= -2;
  return r;
}

using ChiKey = std::tuple<BrieskornSpec, Region, int>;

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<ChiKey, long>& memo() {
  static std::map<ChiKey, long> m;
  return m;
}

struct Triple {
  long lt, eq, gt;  // chi_c of {g < c}, {g = c}, {g > c}
};

long chi_rec(const BrieskornSpec& s, Region r, int c);

Triple triple(const BrieskornSpec& g, int c) {
  return {chi_rec(g, Region::neg, c), chi_rec(g, Region::zero, c), chi_rec(g, Region::pos, c)};
}

// Eliminate the last variable: odd exponents give a graph, even exponents a double
// cover of a sign region.
long chi_rec(const BrieskornSpec& s, Region r, int c) {
  if (s.empty()) {
    switch (r) {
      case Region::zero: return c == 0;
      case Region::pos: return 0 > c;
      case Region::neg: return 0 < c;
    }
  }
  ChiKey key{s, r, c};
  {
    std::lock_guard<std::mutex> lk(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  BrieskornTerm last = s[s.dim() - 1];
  BrieskornSpec g = s.without(s.dim() - 1);
  long torus = pow_m2(g.dim());
  long v = 0;
  if (last.k % 2) {
    Triple t = triple(g, c);
    switch (r) {
      case Region::zero: v = torus - t.eq; break;
      case Region::pos: v = -t.lt - t.eq - 2 * t.gt; break;
      case Region::neg: v = -t.gt - t.eq - 2 * t.lt; break;
    }
  } else if (last.sign > 0) {
    // f = g + t with t > 0 hit twice.
    switch (r) {
      case Region::zero: v = 2 * chi_rec(g, Region::neg, c); break;
      case Region::pos: v = -2 * torus; break;
      case Region::neg: v = -2 * chi_rec(g, Region::neg, c); break;
    }
  } else {
    switch (r) {
      case Region::zero: v = 2 * chi_rec(g, Region::pos, c); break;
      case Region::pos: v = -2 * chi_rec(g, Region::pos, c); break;
      case Region::neg: v = -2 * torus; break;
    }
  }
  std::lock_guard<std::mutex> lk(memo_mutex());
  memo()[key] = v;
  return v;
}

BigRat chi_gen(const ASGen& g) {
  switch (g.kind) {
    case ASGen::ZeroSet: return chi_brieskorn_sets(g.spec, Region::zero, 0);
    case ASGen::FiberSet: return chi_brieskorn_sets(g.spec, Region::zero, 1);
    case ASGen::Named:
      throw UnknownClassValue("no value supplied for named class " + g.str());
    case ASGen::PolyZero:
      if (g.poly.nvars() > 2) throw UnknownClassValue("chi_c of " + g.str() + " needs n <= 2");
      return plane_curve_oracle(g.poly, Region::zero);
    case ASGen::PolyFiber:
      if (g.poly.nvars() > 2) throw UnknownClassValue("chi_c of " + g.str() + " needs n <= 2");
      return plane_curve_oracle(g.poly.plus_constant(-1), Region::zero);
  }
  return 0;
}

ScalarValue u_minus(long c) { return ScalarValue(LaurentPoly::from_terms({{1, BigInt(1)}, {0, BigInt(-c)}})); }

ScalarValue beta_gen(const ASGen& g) {
  switch (g.kind) {
    case ASGen::ZeroSet:
      // Canonical ZeroSet generators are all-even with mixed signs.
      if (g.spec.dim() == 2) return u_minus(1) * ScalarValue(2);
      break;
    case ASGen::FiberSet:
      if (g.spec.dim() == 2) {
        if (g.spec[0].sign > 0 && g.spec[1].sign > 0) return u_minus(3);  // oval minus 4 points
        return u_minus(1) * ScalarValue(2);  // two branches, each R minus a point
      }
      break;
    default:
      break;
  }
  throw UnknownClassValue("beta is not available for " + g.str());
}

// chi_c of F^{c}(atom), F^{>}(atom) or F^{<}(atom).
BigRat chi_atom(const MotAtom& a, Functor f) {
  switch (a.kind) {
    case MotAtom::Mon: {
      if (a.k % 2) return f == Functor::Fplus || f == Functor::Fminus ? 1 : -1;
      switch (f) {
        case Functor::Fplus: return a.sign > 0 ? 2 : 0;
        case Functor::Fminus: return a.sign < 0 ? 2 : 0;
        case Functor::Fpos: return a.sign > 0 ? -2 : 0;
        case Functor::Fneg: return a.sign < 0 ? -2 : 0;
        default: break;
      }
      break;
    }
    case MotAtom::Geom: {
      BigRat v = 0;
      for (const auto& st : geom_strata(a)) {
        long inner = 0;
        switch (f) {
          case Functor::Fplus: inner = chi_brieskorn_sets(st.rest, Region::zero, 1); break;
          case Functor::Fminus: inner = chi_brieskorn_sets(st.rest, Region::zero, -1); break;
          case Functor::Fpos: inner = chi_brieskorn_sets(st.rest, Region::pos, 0); break;
          case Functor::Fneg: inner = chi_brieskorn_sets(st.rest, Region::neg, 0); break;
          default: break;
        }
        if (inner == 0) continue;
        v += BigRat(st.sign * inner) * chi_c(st.zeros);
      }
      return v;
    }
    case MotAtom::Face: {
      if (a.poly.nvars() > 2) throw UnknownClassValue("chi_c of " + a.str() + " needs n <= 2");
      switch (f) {
        case Functor::Fplus: return plane_curve_oracle(a.poly.plus_constant(-1), Region::zero);
        case Functor::Fminus: return plane_curve_oracle(a.poly.plus_constant(1), Region::zero);
        case Functor::Fpos: return plane_curve_oracle(a.poly, Region::pos);
        case Functor::Fneg: return plane_curve_oracle(a.poly, Region::neg);
        default: break;
      }
      break;
    }
    case MotAtom::NamedEq:
      throw UnknownClassValue("no value supplied for named class " + a.str());
  }
  throw UnknownClassValue("unsupported realization of " + a.str());
}

ASClass fiber_atom(const MotAtom& a, int c) {
  switch (a.kind) {
    case MotAtom::Mon:
      if (a.k % 2) return ASClass(1);
      return ASClass(a.sign == c ? 2 : 0);
    case MotAtom::Geom: {
      ASClass r;
      for (const auto& st : geom_strata(a)) {
        ASClass t = st.zeros * ASClass::fiber_set(st.rest, c);
        if (st.sign > 0)
          r += t;
        else
          r -= t;
      }
      return r;
    }
    case MotAtom::Face:
      return ASClass::poly_fiber(a.poly, c);
    case MotAtom::NamedEq:
      break;
  }
  throw UnknownClassValue("no value supplied for named class " + a.str());
}

}  // namespace

long chi_brieskorn_sets(const BrieskornSpec& s, Region r, int c) {
  if (c < -1 || c > 1) throw InvalidGerm("fiber value must be -1, 0 or 1");
  return chi_rec(s, r, c);
}

BigRat chi_c(const ScalarValue& s) { return s.eval(BigRat(-1)); }

BigRat chi_c(const ASClass& x) {
  BigRat v = 0;
  for (const auto& [m, s] : x.terms()) {
    BigRat t = chi_c(s);
    for (const auto& g : m) {
      if (t == 0) break;
      t *= chi_gen(g);
    }
    v += t;
  }
  return v;
}

BigRat chi_F(const MotClass& x, Functor f) {
  if (f == Functor::forget) return chi_F(x, Functor::Fpos) + chi_F(x, Functor::Fneg);
  bool sign_rule = f == Functor::Fpos || f == Functor::Fneg;
  BigRat v = 0;
  for (const auto& [m, coeff] : x.terms()) {
    BigRat c = chi_c(coeff);
    if (c == 0) continue;
    BigRat t = 1;
    if (m.empty()) {
      t = sign_rule ? -1 : 1;
    } else {
      for (const auto& a : m) t *= chi_atom(a, f);
      if (sign_rule && m.size() % 2 == 0) t = -t;
    }
    v += c * t;
  }
  return v;
}

ScalarValue beta(const ASClass& x) {
  ScalarValue v;
  for (const auto& [m, s] : x.terms()) {
    ScalarValue t = s;
    for (const auto& g : m) t *= beta_gen(g);
    v += t;
  }
  return v;
}

ASClass fiber_class(const MotClass& x, int c) {
  if (c != 1 && c != -1) throw InvalidGerm("fiber value must be +1 or -1");
  ASClass r;
  for (const auto& [m, coeff] : x.terms()) {
    if (m.empty()) {
      r += coeff;
    } else if (m.size() == 1) {
      r += coeff * fiber_atom(m[0], c);
    } else {
      MotClass e = geometric_expand(m);
      for (const auto& [em, ec] : e.terms())
        r += coeff * ec * (em.empty() ? ASClass(1) : fiber_atom(em[0], c));
    }
  }
  return r;
}

ScalarValue beta_realize(const MotClass& x, Functor f) {
  switch (f) {
    case Functor::forget: return beta(forget(x));
    case Functor::Fplus: return beta(fiber_class(x, 1));
    case Functor::Fminus: return beta(fiber_class(x, -1));
    default: break;
  }
  throw UnknownClassValue(std::string("beta is not defined under F^") + functor_name(f) +
                          " (semialgebraic images)");
}

}  // namespace motivzeta
