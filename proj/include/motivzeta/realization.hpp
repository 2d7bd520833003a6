#pragma once

#include <string>

#include "motivzeta/motive.hpp"

namespace motivzeta {

enum class Functor { forget, Fplus, Fminus, Fpos, Fneg };
enum class Region { zero, pos, neg };

const char* functor_name(Functor f);

// chi_c of {f ⋈ c} ∩ (R*)^d for f = sum sign_i x_i^k_i; c in {-1, 0, 1}.
long chi_brieskorn_sets(const BrieskornSpec& s, Region r, int c = 0);

// chi_c of {f ⋈ 0} ∩ (R*)^n for a polynomial in n <= 2 variables, by cylindrical
// decomposition with exact real-root isolation.
long plane_curve_oracle(const Poly& f, Region r);

BigRat chi_c(const ScalarValue& s);  // L -> -1
BigRat chi_c(const ASClass& x);
BigRat chi_F(const MotClass& x, Functor f);

// beta values are elements of Q(u), printed with the variable u.
ScalarValue beta(const ASClass& x);
ScalarValue beta_realize(const MotClass& x, Functor f);

// F^{+} (c = 1) and F^{-} (c = -1) as AS classes.
ASClass fiber_class(const MotClass& x, int c);

}  // namespace motivzeta
