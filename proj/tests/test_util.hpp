#pragma once

#include <random>
#include <string>
#include <vector>

#include "motivzeta/brieskorn.hpp"
#include "motivzeta/class_expr.hpp"
#include "motivzeta/motive.hpp"
#include "motivzeta/scalar.hpp"

namespace motivzeta {

// Readable gtest failure messages.
inline void PrintTo(const MotClass& x, std::ostream* os);
inline void PrintTo(const ScalarValue& x, std::ostream* os) { *os << x.str(); }

}  // namespace motivzeta

namespace mzt {

using namespace motivzeta;

inline int uniform(std::mt19937& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline LaurentPoly random_laurent(std::mt19937& g, int terms = 3, int span = 3) {
  std::vector<LaurentPoly::Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({uniform(g, -span, span), BigInt(uniform(g, -5, 5))});
  return LaurentPoly::from_terms(t);
}

inline ScalarValue random_scalar(std::mt19937& g) {
  LaurentPoly den;
  while (den.is_zero()) den = random_laurent(g, 2, 2);
  return ScalarValue(random_laurent(g), den);
}

inline BrieskornSpec random_spec(std::mt19937& g, int dmin, int dmax, int kmin, int kmax) {
  std::vector<BrieskornTerm> t;
  int d = uniform(g, dmin, dmax);
  for (int i = 0; i < d; ++i) t.push_back({uniform(g, 0, 1) ? 1 : -1, uniform(g, kmin, kmax)});
  return BrieskornSpec(t);
}

// Small random class built from the unit, Mon atoms and Laurent scalars.
inline MotClass random_class(std::mt19937& g, int terms = 2) {
  MotClass x;
  for (int i = 0; i < terms; ++i) {
    MotClass atom = MotClass::unit();
    int kind = uniform(g, 0, 3);
    if (kind == 1) atom = MotClass::mon(uniform(g, 0, 1) ? 1 : -1, 2 * uniform(g, 1, 2));
    if (kind == 2) atom = MotClass::mon(uniform(g, 0, 1) ? 1 : -1, uniform(g, 2, 4));
    if (kind == 3) atom = convolve(MotClass::mon(1, 2), MotClass::mon(uniform(g, 0, 1) ? 1 : -1, 2));
    x += atom.scaled(ScalarValue(LaurentPoly::monomial(BigInt(uniform(g, -3, 3)), uniform(g, -2, 1))));
  }
  return x;
}

}  // namespace mzt

inline void motivzeta::PrintTo(const MotClass& x, std::ostream* os) { *os << to_string(x); }
