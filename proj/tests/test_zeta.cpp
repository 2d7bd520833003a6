#include <gtest/gtest.h>

#include "motivzeta/class_expr.hpp"
#include "motivzeta/errors.hpp"
#include "motivzeta/germ.hpp"
#include "motivzeta/zeta.hpp"
#include "test_util.hpp"

using namespace motivzeta;

namespace {

ScalarValue L(std::int64_t k = 1) { return ScalarValue::L(k); }
MotClass unit() { return MotClass::unit(); }

// The x^3 - y^3 form: (L + (L - 1) L^-1 T/(1 - L^-1 T)) L^-2 T^3/(1 - L^-2 T^3).
RationalZeta x3y3_form() {
  RationalZeta r;
  r.add({unit().scaled(L()), 0, {{2, 3, true}}, {}});
  r.add({unit().scaled(L() - 1), 0, {{1, 1, true}, {2, 3, true}}, {}});
  return r;
}

// Same series by summing over the exponents directly.
ZetaSeries x3y3_by_enumeration(int order) {
  ZetaSeries z(order);
  for (int a = 1; 3 * a <= order; ++a) {
    z[3 * a] += unit().scaled(L() * L(-2 * a));
    for (int b = 1; 3 * a + b <= order; ++b) z[3 * a + b] += unit().scaled((L() - 1) * L(-2 * a - b));
  }
  return z;
}

ZetaSeries constant_series(const MotClass& c, int order) {
  ZetaSeries z(order);
  for (int n = 1; n <= order; ++n) z[n] = c;
  return z;
}

ZetaSeries random_brieskorn_plain(std::mt19937& g, int order) {
  BrieskornSpec s = mzt::random_spec(g, 1, 3, 2, 6);
  return modified_transform(brieskorn_modified_series(s, order), TransformDir::toPlain);
}

}  // namespace

TEST(Expand, MonomialForm) {
  for (int k = 1; k <= 5; ++k) {
    ZetaSeries z = expand(monomial_zeta(-1, k), 2 * k);
    MotClass m = MotClass::mon(-1, k);
    for (int n = 1; n <= 2 * k; ++n) {
      MotClass expect = n == k ? m.scaled(L(-1)) : n == 2 * k ? m.scaled(L(-2)) : MotClass();
      EXPECT_EQ(z[n], expect);
    }
  }
}

TEST(Expand, EmptyIsZero) {
  ZetaSeries z = expand(RationalZeta{}, 5);
  EXPECT_EQ(z, ZetaSeries(5));
}

TEST(Expand, CubesFormAgainstEnumeration) {
  ZetaSeries z = expand(x3y3_form(), 7);
  EXPECT_EQ(z[3], unit().scaled(L() * L(-2)));
  EXPECT_EQ(z[4], unit().scaled((L() - 1) * L(-3)));
  // T^6 also receives the (L - 1) L^-5 term from 3 + 3.
  EXPECT_EQ(z[6], unit().scaled(L() * L(-4) + (L() - 1) * L(-5)));
  EXPECT_EQ(z[7], unit().scaled((L() - 1) * (L(-5) + L(-6))));
  EXPECT_EQ(expand(x3y3_form(), 40), x3y3_by_enumeration(40));
}

TEST(Expand, RationalPrintForm) {
  EXPECT_EQ(x3y3_form().str(),
            "L*unit*[L^-2*T^3/(1 - L^-2*T^3)] + (L - 1)*unit*[L^-1*T/(1 - L^-1*T)]*[L^-2*T^3/(1 - L^-2*T^3)]");
}

TEST(Hadamard, UnitSeriesIsNeutral) {
  std::mt19937 g(31);
  ZetaSeries a = random_brieskorn_plain(g, 20);
  EXPECT_EQ(hadamard(a, constant_series(unit(), 20)), a);
  EXPECT_EQ(hadamard(ZetaSeries(20), a), ZetaSeries(20));
}

TEST(Hadamard, CubesFirstCoefficient) {
  ZetaSeries a = brieskorn_modified_zeta(BrieskornSpec({{1, 3}}), 6);
  ZetaSeries b = brieskorn_modified_zeta(BrieskornSpec({{-1, 3}}), 6);
  EXPECT_EQ(a[1], -unit());
  EXPECT_EQ(hadamard(a, b)[1], unit());
}

TEST(Hadamard, OrdersMustMatch) { EXPECT_THROW(hadamard(ZetaSeries(3), ZetaSeries(4)), TruncationMismatch); }

TEST(NaiveOf, Examples) {
  for (int k = 2; k <= 4; ++k) {
    ZetaSeries n = naive_of(expand(monomial_zeta(1, k), 3 * k));
    for (int q = 1; q <= 3; ++q) EXPECT_EQ(n[k * q], unit().scaled((L() - 1) * L(-q)));
  }
  EXPECT_EQ(naive_of(ZetaSeries(4)), ZetaSeries(4));
  ZetaSeries t(1);
  t[1] = unit();
  EXPECT_EQ(naive_of(t)[1], unit().scaled(L() - 1));
}

TEST(ModifiedTransform, MonomialCoefficients) {
  for (int k = 2; k <= 5; ++k)
    for (int s : {1, -1}) {
      ZetaSeries z = modified_transform(expand(monomial_zeta(s, k), 30), TransformDir::toModified);
      for (int n = 1; n <= 30; ++n) {
        MotClass expect = n % k ? -unit() : MotClass::mon(s, k) - unit();
        EXPECT_EQ(z[n], expect.scaled(L(-(n / k))));
      }
    }
}

TEST(ModifiedTransform, RoundTrip) {
  std::mt19937 g(32);
  for (int i = 0; i < 20; ++i) {
    ZetaSeries z = random_brieskorn_plain(g, 50);
    EXPECT_EQ(modified_transform(modified_transform(z, TransformDir::toModified), TransformDir::toPlain), z);
  }
}

TEST(ModifiedTransform, ZeroInput) {
  ZetaSeries z = modified_transform(ZetaSeries(6), TransformDir::toModified);
  EXPECT_EQ(z, constant_series(-unit(), 6));
}

// (L - Zt^naive)/(L - T) = (1 - Z^naive)/(1 - T), compared coefficientwise.
TEST(ModifiedTransform, NaiveIdentity) {
  std::mt19937 g(33);
  const int N = 50;
  for (int i = 0; i < 20; ++i) {
    ZetaSeries z = random_brieskorn_plain(g, N);
    ZetaSeries zn = naive_of(z);
    ZetaSeries tn = naive_of(modified_transform(z, TransformDir::toModified));
    MotClass rhs = unit();  // running 1 - sum z^naive_j
    for (int n = 1; n <= N; ++n) {
      rhs -= zn[n];
      // 1/(L - T) = sum_i L^{-i-1} T^i
      MotClass lhs = unit().scaled(L() * L(-n - 1));
      for (int j = 1; j <= n; ++j) lhs -= tn[j].scaled(L(-(n - j) - 1));
      ASSERT_EQ(lhs, rhs) << "n = " << n;
    }
  }
}

// (1 - Z^chi)/(1 - T) = (1 + Zt^chi)/(1 + T).
TEST(ModifiedTransform, ChiIdentity) {
  std::mt19937 g(34);
  const int N = 50;
  for (int i = 0; i < 20; ++i) {
    ZetaSeries z = random_brieskorn_plain(g, N);
    auto zc = realize_series(z, Invariant::chi_c, Functor::forget);
    auto tc = realize_series(modified_transform(z, TransformDir::toModified), Invariant::chi_c, Functor::forget);
    BigRat lhs = 1, rhs = 1, sign = 1;
    for (int n = 1; n <= N; ++n) {
      lhs -= chi_c(zc[n - 1]);
      // (1 + sum t_j T^j) * sum (-T)^i
      sign = -sign;
      BigRat r = sign;
      for (int j = 1; j <= n; ++j) r += chi_c(tc[j - 1]) * ((n - j) % 2 ? -1 : 1);
      rhs = r;
      ASSERT_EQ(lhs, rhs) << "n = " << n;
    }
  }
}

TEST(Limit, SingleIFormFactor) {
  RationalZeta r;
  r.add({MotClass::mon(1, 2).scaled(L()), 0, {{3, 2, true}}, {}});
  EXPECT_EQ(limit_at_infinity(r), -MotClass::mon(1, 2).scaled(L()));
}

TEST(Limit, JFormVanishes) {
  RationalZeta r;
  r.add({unit(), 0, {{3, 2, true}, {1, 1, false}}, {}});
  EXPECT_TRUE(limit_at_infinity(r).is_zero());
  RationalZeta grows;
  grows.add({unit(), 2, {{1, 1, false}}, {}});
  EXPECT_THROW(limit_at_infinity(grows), NotInSrForm);
}

TEST(Limit, MonomialMilnorFiber) {
  for (int k = 2; k <= 6; ++k) {
    EXPECT_EQ(limit_at_infinity(monomial_zeta(-1, k)), -MotClass::mon(-1, k));
    EXPECT_EQ(milnor_from_limit(monomial_zeta(-1, k)).value, MotClass::mon(-1, k));
    // -lim of the modified form is S - unit.
    RationalZeta mod = brieskorn_rational_form(BrieskornSpec({{-1, k}}));
    EXPECT_EQ(-limit_at_infinity(mod), MotClass::mon(-1, k) - unit());
  }
}

TEST(Limit, HadamardOfMonomialForms) {
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = 1; k2 <= 4; ++k2)
      for (int s : {1, -1}) {
        RationalZeta a = monomial_zeta(1, k1), b = monomial_zeta(s, k2);
        RationalZeta h = hadamard_rational(a, b);
        int order = 3 * k1 * k2;
        EXPECT_EQ(expand(h, order), hadamard(expand(a, order), expand(b, order)));
        EXPECT_EQ(limit_at_infinity(h), -convolve(limit_at_infinity(a), limit_at_infinity(b)));
      }
}

TEST(RationalEqual, DetectsEqualForms) {
  RationalZeta a = x3y3_form();
  RationalZeta b;
  b.add({unit().scaled(L() - 1), 0, {{1, 1, true}, {2, 3, true}}, {}});
  b.add({unit().scaled(L()), 0, {{2, 3, true}}, {}});
  EXPECT_TRUE(rational_equal(a, b));
  EXPECT_FALSE(rational_equal(a, monomial_zeta(1, 3)));
}

TEST(Realize, RationalFormMatchesCoefficients) {
  for (Invariant v : {Invariant::chi_c, Invariant::beta})
    for (Functor f : {Functor::forget, Functor::Fplus, Functor::Fminus}) {
      RealizedRational r = realize_rational(x3y3_form(), v, f);
      EXPECT_EQ(r.expand(30), realize_series(expand(x3y3_form(), 30), v, f)) << r.str();
    }
  for (Functor f : {Functor::Fpos, Functor::Fneg}) {
    RealizedRational r = realize_rational(x3y3_form(), Invariant::chi_c, f);
    EXPECT_EQ(r.expand(30), realize_series(expand(x3y3_form(), 30), Invariant::chi_c, f));
  }
}

TEST(Realize, BetaUndefinedOnSignLoci) {
  EXPECT_THROW(realize(unit(), Invariant::beta, Functor::Fpos), UnknownClassValue);
}
