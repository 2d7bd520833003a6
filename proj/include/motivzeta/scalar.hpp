#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace motivzeta {

using BigInt = mpz_class;
using BigRat = mpq_class;

class TokenStream;

// Sparse integer Laurent polynomial in one variable, terms sorted by exponent,
// no zero coefficients stored.
class LaurentPoly {
public:
  using Term = std::pair<std::int64_t, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  explicit LaurentPoly(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, std::int64_t e);
  static LaurentPoly from_terms(std::vector<Term> terms);  // merges and drops zeros

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::int64_t degree() const;
  std::int64_t low_degree() const;
  const BigInt& lead() const;
  BigInt coeff(std::int64_t e) const;
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly shifted(std::int64_t k) const;
  LaurentPoly scaled(const BigInt& c) const;
  LaurentPoly pow(unsigned n) const;
  BigInt content() const;  // gcd of coefficients, nonnegative
  BigRat eval(const BigRat& x) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend int compare(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return compare(a, b) < 0; }

  std::string str(char var = 'L') const;

private:
  std::vector<Term> terms_;
};

// Element of Q(L) stored as num/den of Laurent polynomials; den has low degree 0,
// positive leading coefficient, and gcd(num, den) is a unit.
class ScalarValue {
public:
  ScalarValue() : num_(0), den_(1) {}
  ScalarValue(long c) : num_(c), den_(1) {}  // NOLINT
  ScalarValue(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  ScalarValue(LaurentPoly num, LaurentPoly den);
  static ScalarValue L(std::int64_t k = 1) { return ScalarValue(LaurentPoly::monomial(1, k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const;  // den == 1

  ScalarValue operator-() const;
  ScalarValue& operator+=(const ScalarValue& o);
  ScalarValue& operator-=(const ScalarValue& o);
  ScalarValue& operator*=(const ScalarValue& o);
  ScalarValue& operator/=(const ScalarValue& o);
  friend ScalarValue operator+(ScalarValue a, const ScalarValue& b) { return a += b; }
  friend ScalarValue operator-(ScalarValue a, const ScalarValue& b) { return a -= b; }
  friend ScalarValue operator*(ScalarValue a, const ScalarValue& b) { return a *= b; }
  friend ScalarValue operator/(ScalarValue a, const ScalarValue& b) { return a /= b; }
  ScalarValue pow(long n) const;

  // Exact value at a rational point; DivisionByZero if the denominator vanishes there.
  BigRat eval(const BigRat& x) const;

  friend bool operator==(const ScalarValue& a, const ScalarValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ScalarValue& a, const ScalarValue& b) { return !(a == b); }
  friend bool operator<(const ScalarValue& a, const ScalarValue& b);

  // Render as text in the given variable; `atomic` wraps sums in parentheses.
  std::string str(char var = 'L', bool atomic = false) const;
  static ScalarValue parse(const std::string& src, char var = 'L');
  static ScalarValue parse(TokenStream& ts, char var);

private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

enum class ArithOp { add, sub, mul, div };
ScalarValue scalar_arith(const ScalarValue& a, const ScalarValue& b, ArithOp op);

// Truncated expansion in L^{-1}: exponents >= -depth are kept exactly.
struct TruncatedLSeries {
  std::map<std::int64_t, BigInt> terms;
  std::int64_t depth = 0;
  bool complete = true;

  TruncatedLSeries& operator+=(const TruncatedLSeries& o);
  friend TruncatedLSeries operator*(const TruncatedLSeries& a, const TruncatedLSeries& b);
  bool same_terms(const TruncatedLSeries& o) const { return terms == o.terms; }
  std::string str(char var = 'L') const;
};

TruncatedLSeries expand_geometric(std::int64_t c, std::int64_t depth);
// Expansion of an exact scalar; the denominator must have leading coefficient +-1.
TruncatedLSeries to_lseries(const ScalarValue& s, std::int64_t depth);

// Dense integer polynomial helpers shared with the real-root code.
using DenseZ = std::vector<BigInt>;  // coefficient of x^i at index i
DenseZ dense_gcd(DenseZ a, DenseZ b);  // primitive gcd with positive leading coefficient

}  // namespace motivzeta
