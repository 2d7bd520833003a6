#include <gtest/gtest.h>

#include "motivzeta/class_expr.hpp"
#include "motivzeta/errors.hpp"
#include "motivzeta/poly.hpp"
#include "motivzeta/realization.hpp"
#include "test_util.hpp"

using namespace motivzeta;

namespace {

ScalarValue L(std::int64_t k = 1) { return ScalarValue::L(k); }
MotClass unit() { return MotClass::unit(); }
ScalarValue u(std::int64_t k = 1) { return ScalarValue::L(k); }  // beta values live in Q(u)

BrieskornSpec spec(std::vector<BrieskornTerm> t) { return BrieskornSpec(std::move(t)); }

long pow_m2(int d) {
  long r = 1;
  while (d-- > 0) r *= -2;
  return r;
}

}  // namespace

TEST(ChiF, Examples) {
  EXPECT_EQ(chi_F(unit(), Functor::Fpos), -1);
  EXPECT_EQ(chi_F(unit() - MotClass::mon(1, 2), Functor::Fplus), -1);
  EXPECT_EQ(chi_F(unit() - MotClass::mon(-1, 2), Functor::Fplus), 1);
  EXPECT_EQ(chi_F(convolve(MotClass::mon(1, 2), MotClass::mon(1, 2)), Functor::Fpos), -4);
  EXPECT_EQ(chi_F(unit(), Functor::forget), -2);
  EXPECT_EQ(chi_c(L()), -1);
}

TEST(ChiF, NamedClassNeedsValue) {
  EXPECT_THROW(chi_F(MotClass::named("U", 2), Functor::Fplus), UnknownClassValue);
}

TEST(ChiF, MultiplicativeUnderFiberFunctors) {
  std::mt19937 g(21);
  for (int i = 0; i < 300; ++i) {
    MotClass x = mzt::random_class(g), y = mzt::random_class(g);
    for (Functor f : {Functor::Fplus, Functor::Fminus})
      EXPECT_EQ(chi_F(convolve(x, y), f), chi_F(x, f) * chi_F(y, f)) << to_string(x) << " | " << to_string(y);
    for (Functor f : {Functor::Fpos, Functor::Fneg})
      EXPECT_EQ(chi_F(convolve(x, y), f), -chi_F(x, f) * chi_F(y, f)) << to_string(x) << " | " << to_string(y);
  }
}

TEST(ChiF, SignLociAgainstFibers) {
  std::mt19937 g(22);
  for (int i = 0; i < 300; ++i) {
    MotClass x = mzt::random_class(g, 3);
    EXPECT_EQ(chi_F(x, Functor::Fpos), -chi_F(x, Functor::Fplus));
    EXPECT_EQ(chi_F(x, Functor::Fneg), -chi_F(x, Functor::Fminus));
    EXPECT_EQ(chi_F(x, Functor::forget), chi_F(x, Functor::Fpos) + chi_F(x, Functor::Fneg));
  }
}

TEST(ChiBrieskornSets, Examples) {
  EXPECT_EQ(chi_brieskorn_sets(spec({{1, 3}, {-1, 3}}), Region::zero), -2);
  EXPECT_EQ(chi_brieskorn_sets(spec({{1, 2}, {1, 2}}), Region::zero), 0);
  EXPECT_EQ(chi_brieskorn_sets(spec({{1, 3}, {-1, 3}}), Region::zero, 1), -3);
}

TEST(ChiBrieskornSets, OneVariableSignCounts) {
  for (int k = 2; k <= 7; ++k)
    for (int s : {1, -1}) {
      // s x^k > 0: all of R* for even k and s = 1, nothing for even k and s = -1,
      // a half-line for odd k.
      long expect_pos = k % 2 ? -1 : (s > 0 ? -2 : 0);
      EXPECT_EQ(chi_brieskorn_sets(spec({{s, k}}), Region::pos), expect_pos);
      EXPECT_EQ(chi_brieskorn_sets(spec({{s, k}}), Region::zero), 0);
    }
}

TEST(ChiBrieskornSets, PartitionIdentity) {
  std::mt19937 g(23);
  for (int i = 0; i < 200; ++i) {
    BrieskornSpec s = mzt::random_spec(g, 1, 4, 2, 7);
    long total = chi_brieskorn_sets(s, Region::pos) + chi_brieskorn_sets(s, Region::neg) +
                 chi_brieskorn_sets(s, Region::zero);
    EXPECT_EQ(total, pow_m2(static_cast<int>(s.dim()))) << s.list_str();
  }
}

TEST(PlaneCurveOracle, Examples) {
  EXPECT_EQ(plane_curve_oracle(Poly::parse("x^2 + y^2"), Region::zero), 0);
  // Two punctured lines, four open rays.
  EXPECT_EQ(plane_curve_oracle(Poly::parse("x^2 - y^2"), Region::zero), -4);
  EXPECT_EQ(plane_curve_oracle(Poly::parse("x^3 - y^3"), Region::pos),
            chi_brieskorn_sets(spec({{1, 3}, {-1, 3}}), Region::pos));
  // Hand count: x y - 1 = 0 is two open branches of a hyperbola.
  EXPECT_EQ(plane_curve_oracle(Poly::parse("x*y - 1"), Region::zero), -2);
}

TEST(PlaneCurveOracle, AgreesWithRecursion) {
  std::mt19937 g(24);
  for (int i = 0; i < 20; ++i) {
    BrieskornSpec s = mzt::random_spec(g, 2, 2, 2, 6);
    Poly p = Poly::from_brieskorn(s);
    for (Region r : {Region::zero, Region::pos, Region::neg})
      EXPECT_EQ(plane_curve_oracle(p, r), chi_brieskorn_sets(s, r)) << s.list_str();
  }
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta_realize(unit(), Functor::forget), u() - 1);
  EXPECT_EQ(beta(ASClass::zero_set(spec({{1, 3}, {-1, 3}}))), u() - 1);
  EXPECT_EQ(beta(ASClass::fiber_set(spec({{1, 3}, {-1, 3}}), 1)), u() - 2);
  EXPECT_EQ(beta(ASClass(L())), u());
}

TEST(Beta, EvenBinomialClassification) {
  // x^2 = y^4 splits into the branches x = +-y^2, each a copy of R*.
  EXPECT_EQ(beta(ASClass::zero_set(spec({{1, 2}, {-1, 4}}))), (u() - 1) * 2);
  EXPECT_TRUE(ASClass::zero_set(spec({{1, 2}, {1, 4}})).is_zero());
}

TEST(Beta, DegreeIsDimension) {
  std::mt19937 g(25);
  for (int i = 0; i < 100; ++i) {
    BrieskornSpec s = mzt::random_spec(g, 2, 3, 2, 7);
    if (!s.has_odd() && s.dim() > 2) continue;
    for (int kind = 0; kind < 2; ++kind) {
      ASClass c = kind == 0 ? ASClass::zero_set(s) : ASClass::fiber_set(s, 1);
      if (c.is_zero()) continue;
      ScalarValue b = beta(c);
      if (b.is_zero()) continue;
      EXPECT_EQ(b.num().degree() - b.den().degree(), static_cast<std::int64_t>(s.dim()) - 1) << s.list_str();
    }
  }
}

TEST(Beta, UnsupportedOutsideTheCatalog) {
  ASClass all_even = ASClass::zero_set(spec({{1, 2}, {1, 2}, {-1, 2}}));
  EXPECT_THROW(beta(all_even), UnknownClassValue);
  EXPECT_THROW(beta_realize(unit(), Functor::Fpos), UnknownClassValue);
}

TEST(Beta, FiberFunctors) {
  EXPECT_EQ(beta_realize(unit(), Functor::Fplus), ScalarValue(1));
  EXPECT_EQ(beta_realize(MotClass::mon(1, 2), Functor::Fplus), ScalarValue(2));
  EXPECT_EQ(beta_realize(MotClass::mon(1, 2), Functor::Fminus), ScalarValue(0));
  EXPECT_EQ(beta_realize(unit().scaled(L() - 1), Functor::Fminus), u() - 1);
}
