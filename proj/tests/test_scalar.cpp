#include <gtest/gtest.h>

#include "motivzeta/errors.hpp"
#include "motivzeta/realroots.hpp"
#include "motivzeta/scalar.hpp"
#include "test_util.hpp"

using namespace motivzeta;

namespace {

ScalarValue L(std::int64_t k = 1) { return ScalarValue::L(k); }

// Independent evaluation: plug an integer into num and den separately.
BigRat eval_parts(const ScalarValue& s, long x) { return s.num().eval(BigRat(x)) / s.den().eval(BigRat(x)); }

}  // namespace

TEST(LaurentPoly, CanonicalTerms) {
  LaurentPoly p = LaurentPoly::from_terms({{2, BigInt(3)}, {-1, BigInt(1)}, {2, BigInt(-3)}, {0, BigInt(0)}});
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.degree(), -1);
  EXPECT_EQ(p.low_degree(), -1);
  EXPECT_EQ(p.str(), "L^-1");
  EXPECT_TRUE((p - p).is_zero());
}

TEST(LaurentPoly, PrintsInEitherVariable) {
  LaurentPoly p = LaurentPoly::monomial(1, 2) - LaurentPoly(1);
  EXPECT_EQ(p.str('L'), "L^2 - 1");
  EXPECT_EQ(p.str('u'), "u^2 - 1");
}

TEST(ScalarArith, RingIdentity) {
  EXPECT_EQ(scalar_arith(L() - 1, 1, ArithOp::add), L());
}

TEST(ScalarArith, Inverse) {
  EXPECT_EQ(scalar_arith(L() - 1, ScalarValue(1) / (L() - 1), ArithOp::mul), ScalarValue(1));
}

TEST(ScalarArith, CanonicalLocalization) {
  ScalarValue a = L(-3) * (ScalarValue(1) / (ScalarValue(1) - L(-1)));
  ScalarValue b = (ScalarValue(1) / (L() - 1)) * L(-2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, ScalarValue(1) / (L(3) - L(2)));
  // Both sides at L = 7 by plain rational arithmetic: 7^-3 / (1 - 1/7) = 1/294.
  EXPECT_EQ(a.eval(BigRat(7)), BigRat(1, 294));
  EXPECT_EQ(eval_parts(b, 7), BigRat(1, 294));
}

TEST(ScalarArith, DivisionByZero) {
  EXPECT_THROW(scalar_arith(L(), ScalarValue(0), ArithOp::div), DivisionByZero);
  EXPECT_THROW((ScalarValue(1) / (L() - 1)).eval(BigRat(1)), DivisionByZero);
}

TEST(ScalarValue, DenominatorNormalization) {
  ScalarValue s(LaurentPoly(1), LaurentPoly::monomial(-2, 3) + LaurentPoly::monomial(2, 5));
  EXPECT_EQ(s.den().low_degree(), 0);
  EXPECT_GT(s.den().lead(), 0);
  EXPECT_EQ(s * (LaurentPoly::monomial(-2, 3) + LaurentPoly::monomial(2, 5)), ScalarValue(1));
}

TEST(ScalarValue, ParsePrintRoundTrip) {
  for (std::string src : {"L", "L^-2", "(L - 1)/(L^2 + 1)", "1/(L - 1)", "-3*L^2 + L^-1", "0"}) {
    ScalarValue s = ScalarValue::parse(src);
    EXPECT_EQ(ScalarValue::parse(s.str()), s) << src;
  }
  EXPECT_EQ(ScalarValue::parse("u^2 - u", 'u'), L(2) - L());
  EXPECT_THROW(ScalarValue::parse("L +"), ParseError);
}

TEST(ScalarValue, FieldAxiomsOnRandomTriples) {
  std::mt19937 g(11);
  for (int i = 0; i < 200; ++i) {
    ScalarValue a = mzt::random_scalar(g), b = mzt::random_scalar(g), c = mzt::random_scalar(g);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, ScalarValue(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(ScalarValue, NormalizationPreservesValues) {
  std::mt19937 g(12);
  const long primes[] = {5, 11, 13};
  for (int i = 0; i < 200; ++i) {
    LaurentPoly num = mzt::random_laurent(g, 4, 3), den;
    while (den.is_zero()) den = mzt::random_laurent(g, 3, 3);
    ScalarValue s(num, den);
    EXPECT_EQ(ScalarValue(s.num(), s.den()), s);
    for (long p : primes) {
      BigRat dv = den.eval(BigRat(p));
      if (dv == 0) continue;
      EXPECT_EQ(s.eval(BigRat(p)), num.eval(BigRat(p)) / dv);
    }
  }
}

TEST(ExpandGeometric, Examples) {
  TruncatedLSeries a = expand_geometric(1, 2);
  EXPECT_FALSE(a.complete);
  EXPECT_EQ(a.terms, (std::map<std::int64_t, BigInt>{{-2, 1}, {-1, 1}, {0, 1}}));
  TruncatedLSeries b = expand_geometric(2, 3);
  EXPECT_EQ(b.terms, (std::map<std::int64_t, BigInt>{{-2, 1}, {0, 1}}));
  EXPECT_FALSE(b.complete);
  TruncatedLSeries c = expand_geometric(3, 0);
  EXPECT_EQ(c.terms, (std::map<std::int64_t, BigInt>{{0, 1}}));
  EXPECT_FALSE(c.complete);
}

TEST(ExpandGeometric, TruncatesTheExactIdentity) {
  for (std::int64_t c = 1; c <= 6; ++c)
    for (std::int64_t d = 0; d <= 20; ++d) {
      TruncatedLSeries s = expand_geometric(c, d);
      // (1 - L^-c) * s = 1 - L^{-c(j+1)} for the last kept index j.
      LaurentPoly p;
      for (const auto& [e, v] : s.terms) p += LaurentPoly::monomial(v, e);
      LaurentPoly prod = (LaurentPoly(1) - LaurentPoly::monomial(1, -c)) * p;
      for (const auto& [e, v] : prod.terms()) {
        if (e == 0) {
          EXPECT_EQ(v, 1);
        } else {
          EXPECT_LT(e, -d);
        }
      }
    }
}

TEST(ToLSeries, MatchesGeometricExpansion) {
  ScalarValue s = ScalarValue(1) / (ScalarValue(1) - L(-2));
  TruncatedLSeries t = to_lseries(s, 6);
  EXPECT_TRUE(t.same_terms(expand_geometric(2, 6)));
  EXPECT_FALSE(t.complete);
  EXPECT_TRUE(to_lseries(L(-1) + 1, 4).complete);
}

TEST(RealRoots, CountsAndIsolates) {
  // (x^2 - 2)(x - 1/2)
  QPoly p = (QPoly::x() * QPoly::x() - QPoly::constant(2)) * (QPoly::x() - QPoly::constant(BigRat(1, 2)));
  auto roots = real_roots(p);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_LT(roots[0].midpoint(), -1);
  EXPECT_EQ(sign_at(roots[1], QPoly::x() - QPoly::constant(BigRat(1, 2))), 0);
  EXPECT_EQ(sign_at(roots[2], QPoly::x() * QPoly::x() - QPoly::constant(2)), 0);
  EXPECT_EQ(sign_at(roots[2], QPoly::x() - QPoly::constant(BigRat(141, 100))), 1);
  EXPECT_EQ(real_roots(QPoly::x() * QPoly::x() + QPoly::constant(1)).size(), 0u);
}

TEST(DenseGcd, PrimitiveGcd) {
  // (x - 1)(x + 2) and (x - 1)(3x + 1)
  DenseZ a{BigInt(-2), BigInt(1), BigInt(1)};
  DenseZ b{BigInt(-1), BigInt(-2), BigInt(3)};
  EXPECT_EQ(dense_gcd(a, b), (DenseZ{BigInt(-1), BigInt(1)}));
}
