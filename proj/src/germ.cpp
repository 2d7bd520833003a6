#include "motivzeta/germ.hpp"

#include <numeric>

#include "motivzeta/errors.hpp"

namespace motivzeta {

namespace {

void check_spec(const BrieskornSpec& spec) {
  if (spec.empty()) throw InvalidGerm("Brieskorn spec needs at least one term");
  for (const auto& t : spec.terms()) {
    if (t.k < 2) throw InvalidGerm("Brieskorn exponents must be at least 2");
    if (t.sign != 1 && t.sign != -1) throw InvalidGerm("Brieskorn signs must be +1 or -1");
  }
}

std::int64_t period(const BrieskornSpec& spec) {
  std::int64_t m = 1;
  for (const auto& t : spec.terms()) m = std::lcm(m, static_cast<std::int64_t>(t.k));
  return m;
}

}  // namespace

RationalZeta monomial_zeta(int sign, int k) {
  if (k < 1) throw InvalidGerm("monomial exponent must be positive");
  if (sign != 1 && sign != -1) throw InvalidGerm("monomial sign must be +1 or -1");
  RationalZeta z;
  z.add({MotClass::mon(sign, k), 0, {{1, k, true}}, {}});
  return z;
}

MotClass FactoredCoefficient::value() const {
  if (!shift.fits_slong_p()) throw UnsupportedExpansion("L-shift " + shift.get_str() + " is out of range");
  return alpha.scaled(ScalarValue::L(-shift.get_si()));
}

// Each monomial contributes -L^{-floor(n/k)} (1 - [k | n] Mon); the signs
// (-1)^{d-1} (-1)^d collapse to a single minus.
FactoredCoefficient brieskorn_factored(const BrieskornSpec& spec, const BigInt& n) {
  check_spec(spec);
  if (n < 1) throw InvalidGerm("coefficient index must be positive");
  FactoredCoefficient c;
  c.alpha = MotClass(-1);
  for (const auto& t : spec.terms()) {
    BigInt q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(t.k));
    c.shift += q;
    if (r == 0) {
      c.alpha = convolve(c.alpha, MotClass::unit() - MotClass::mon(t.sign, t.k));
      if (c.alpha.is_zero()) break;
    }
  }
  return c;
}

MotClass brieskorn_coefficient(const BrieskornSpec& spec, std::int64_t n) {
  return brieskorn_factored(spec, BigInt(static_cast<long>(n))).value();
}

ZetaSeries brieskorn_modified_zeta(const BrieskornSpec& spec, int order) {
  check_spec(spec);
  ZetaSeries acc;
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    ZetaSeries z = modified_transform(expand(monomial_zeta(spec[i].sign, spec[i].k), order),
                                      TransformDir::toModified);
    acc = i == 0 ? z : -hadamard(acc, z);
  }
  return acc;
}

ZetaSeries brieskorn_modified_series(const BrieskornSpec& spec, int order) {
  ZetaSeries z(order);
  for (int n = 1; n <= order; ++n) z[n] = brieskorn_coefficient(spec, n);
  return z;
}

RationalZeta brieskorn_rational_form(const BrieskornSpec& spec) {
  check_spec(spec);
  std::int64_t m = period(spec);
  std::int64_t S = 0;
  for (const auto& t : spec.terms()) S += m / t.k;
  RationalZeta r;
  for (std::int64_t n = 1; n <= m; ++n) r.add({brieskorn_coefficient(spec, n), n, {{S, m, false}}, {}});
  int check = static_cast<int>(3 * m);
  if (expand(r, check) != brieskorn_modified_zeta(spec, check))
    throw ValidationFailure("rational form of " + spec.list_str() + " disagrees with its expansion");
  return r;
}

MilnorFiber milnor_fiber_brieskorn(const BrieskornSpec& spec) {
  check_spec(spec);
  MotClass prod = MotClass::unit();
  for (const auto& t : spec.terms()) prod = convolve(prod, MotClass::unit() - MotClass::mon(t.sign, t.k));
  return {MotClass::unit() - prod};
}

ThomSebastianiReport verify_thom_sebastiani(const BrieskornSpec& a, const BrieskornSpec& b, int order) {
  ThomSebastianiReport rep;
  if (order > 0) {
    ZetaSeries joint = brieskorn_modified_series(a.joined(b), order);
    ZetaSeries prod = -hadamard(brieskorn_modified_zeta(a, order), brieskorn_modified_zeta(b, order));
    for (int n = 1; n <= order; ++n)
      if (joint[n] != prod[n]) {
        rep.pass = false;
        rep.first_divergent = n;
        break;
      }
  }
  MotClass s1 = milnor_fiber_brieskorn(a).value;
  MotClass s2 = milnor_fiber_brieskorn(b).value;
  MotClass ts = s1 + s2 - convolve(s1, s2);
  rep.milnor_ok = ts == milnor_fiber_brieskorn(a.joined(b)).value;
  rep.pass = rep.pass && rep.milnor_ok;
  return rep;
}

}  // namespace motivzeta
