#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivzeta/brieskorn.hpp"
#include "motivzeta/poly.hpp"
#include "motivzeta/scalar.hpp"

namespace motivzeta {

// ---- K_0(AS) side ----

// Generators of the scalar ring. TorusDim never appears: it is rewritten to (L-1)^d
// on construction. ZeroSet/FiberSet live in the torus (R*)^d of their spec;
// FiberSet always has value +1 after canonicalization.
struct ASGen {
  enum Kind { ZeroSet, FiberSet, Named, PolyZero, PolyFiber };
  Kind kind = ZeroSet;
  BrieskornSpec spec;
  std::string label;
  int dim = 0;
  Poly poly;

  std::string str() const;
  friend bool operator<(const ASGen& a, const ASGen& b);
  friend bool operator==(const ASGen& a, const ASGen& b);
};

using ASMono = std::vector<ASGen>;  // sorted multiset

class ASClass {
public:
  ASClass() = default;
  ASClass(const ScalarValue& s);  // NOLINT: scalar embedding
  ASClass(long c) : ASClass(ScalarValue(c)) {}  // NOLINT

  // Canonical constructors; each may collapse to a scalar through the rewrites.
  static ASClass zero_set(const BrieskornSpec& s);
  static ASClass fiber_set(const BrieskornSpec& s, int value);
  static ASClass named(const std::string& label, int dim);
  static ASClass poly_zero(const Poly& p);
  static ASClass poly_fiber(const Poly& p, int value);
  static ASClass torus(int d);  // (L-1)^d

  const std::map<ASMono, ScalarValue>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  ScalarValue scalar() const;  // requires is_scalar()

  ASClass operator-() const;
  ASClass& operator+=(const ASClass& o);
  ASClass& operator-=(const ASClass& o);
  friend ASClass operator+(ASClass a, const ASClass& b) { return a += b; }
  friend ASClass operator-(ASClass a, const ASClass& b) { return a -= b; }
  friend ASClass operator*(const ASClass& a, const ASClass& b);
  ASClass scaled(const ScalarValue& s) const;

  friend bool operator==(const ASClass& a, const ASClass& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ASClass& a, const ASClass& b) { return !(a == b); }
  friend bool operator<(const ASClass& a, const ASClass& b) { return a.terms_ < b.terms_; }

  std::string str() const;

private:
  void add_term(const ASMono& m, const ScalarValue& s);
  std::map<ASMono, ScalarValue> terms_;
};

// ---- equivariant side ----

// Atoms of *-monomials.
//   Mon(sign,k): [sign*x^k : R* -> R*], k even after normalization.
//   Geom(support; excl): {x in (R*)^A : f_E(x) != 0 for E in excl} with morphism f_A;
//     excl is a laminar family of index masks over the sorted support, always
//     containing the full mask, never singletons; some exponent is even.
//   NamedEq(label, dim): user-declared equivariant class.
//   Face(poly): (R*)^n minus {poly = 0} with morphism poly, poly not of Brieskorn shape.
struct MotAtom {
  enum Kind { Mon, Geom, NamedEq, Face };
  Kind kind = Mon;
  int sign = 1;
  int k = 1;
  BrieskornSpec support;
  std::vector<unsigned> excl;
  std::string label;
  int dim = 0;
  Poly poly;

  unsigned full_mask() const { return (1u << support.dim()) - 1u; }
  std::string str() const;
  friend bool operator<(const MotAtom& a, const MotAtom& b);
  friend bool operator==(const MotAtom& a, const MotAtom& b);
};

using MotMono = std::vector<MotAtom>;  // sorted multiset, empty = unit

class MotClass {
public:
  MotClass() = default;
  MotClass(const ASClass& s);       // NOLINT: s * unit
  MotClass(const ScalarValue& s);   // NOLINT
  MotClass(long c) : MotClass(ScalarValue(c)) {}  // NOLINT

  static MotClass unit() { return MotClass(1); }
  static MotClass mon(int sign, int k);
  // General GeomTorus in arbitrary support order; masks index that order.
  static MotClass geom(const std::vector<BrieskornTerm>& support, const std::vector<unsigned>& excl);
  static MotClass named(const std::string& label, int dim);
  // [(R*)^n \ {p = 0}, p] for the variables of p; dispatches to Mon/Geom when possible.
  static MotClass face(const Poly& p);

  const std::map<MotMono, ASClass>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;         // only the unit monomial
  ASClass scalar_part() const;    // coefficient of the unit monomial

  MotClass operator-() const;
  MotClass& operator+=(const MotClass& o);
  MotClass& operator-=(const MotClass& o);
  friend MotClass operator+(MotClass a, const MotClass& b) { return a += b; }
  friend MotClass operator-(MotClass a, const MotClass& b) { return a -= b; }
  MotClass scaled(const ASClass& s) const;
  MotClass scaled(const ScalarValue& s) const;

  friend bool operator==(const MotClass& a, const MotClass& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MotClass& a, const MotClass& b) { return !(a == b); }

  void add_term(const MotMono& m, const ASClass& c);

private:
  std::map<MotMono, ASClass> terms_;
};

MotClass normalize(const MotClass& x);
MotClass convolve(const MotClass& x, const MotClass& y);
// Fiber product; supported only when one side is a scalar multiple of the unit.
MotClass multiply(const MotClass& x, const MotClass& y);
// Expansion of a *-monomial of Mon/Geom atoms into Geom atoms and scalars times unit.
MotClass geometric_expand(const MotMono& m);
ASClass forget(const MotClass& x);

// One inclusion-exclusion stratum of a Geom atom: the part of the torus where the
// exclusions in Y vanish. `zeros` is the class of that vanishing locus on the
// variables covered by Y, `rest` the terms of f_A that survive.
struct GeomStratum {
  int sign;
  ASClass zeros;
  BrieskornSpec rest;
};
std::vector<GeomStratum> geom_strata(const MotAtom& g);

}  // namespace motivzeta
