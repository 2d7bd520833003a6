#pragma once

#include <cstdint>

#include "motivzeta/brieskorn.hpp"
#include "motivzeta/zeta.hpp"

namespace motivzeta {

// Zeta function of sign * x^k.
RationalZeta monomial_zeta(int sign, int k);

// n-th modified coefficient as L^{-shift} * alpha, without building a series.
// Indices are arbitrary precision because recovery queries n beyond 64 bits.
struct FactoredCoefficient {
  BigInt shift = 0;
  MotClass alpha;
  MotClass value() const;  // UnsupportedExpansion if the shift overflows
};
FactoredCoefficient brieskorn_factored(const BrieskornSpec& spec, const BigInt& n);
MotClass brieskorn_coefficient(const BrieskornSpec& spec, std::int64_t n);

// (-1)^{d-1} times the Hadamard product of the modified monomial zetas.
ZetaSeries brieskorn_modified_zeta(const BrieskornSpec& spec, int order);
// Same series in closed form, one coefficient at a time.
ZetaSeries brieskorn_modified_series(const BrieskornSpec& spec, int order);

// sum_{r=1}^{m} a_r T^r / (1 - L^{-S} T^m) with m = lcm(k_i), S = sum m/k_i.
RationalZeta brieskorn_rational_form(const BrieskornSpec& spec);

MilnorFiber milnor_fiber_brieskorn(const BrieskornSpec& spec);

struct ThomSebastianiReport {
  bool pass = true;
  int first_divergent = 0;  // 0 when the series agree
  bool milnor_ok = true;
};
ThomSebastianiReport verify_thom_sebastiani(const BrieskornSpec& a, const BrieskornSpec& b, int order);

}  // namespace motivzeta
