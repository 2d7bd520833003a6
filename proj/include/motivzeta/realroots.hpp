#pragma once

#include <utility>
#include <vector>

#include "motivzeta/scalar.hpp"

namespace motivzeta {

// Dense univariate polynomial over Q; c[i] is the coefficient of x^i.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<BigRat> c);
  static QPoly constant(const BigRat& a);
  static QPoly x();
  static QPoly from_dense(const DenseZ& d);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const BigRat& lead() const { return c_.back(); }
  const BigRat& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<BigRat>& coeffs() const { return c_; }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  QPoly scaled(const BigRat& s) const;
  QPoly derivative() const;
  QPoly monic() const;
  BigRat eval(const BigRat& x) const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

private:
  void trim();
  std::vector<BigRat> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);  // monic, or zero
// s*a + t*b = g (monic gcd).
struct ExtGcd {
  QPoly g, s, t;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);
QPoly squarefree_part(const QPoly& p);

int sign_of(const BigRat& v);
std::vector<QPoly> sturm_sequence(const QPoly& p);
int sign_variations(const std::vector<QPoly>& seq, const BigRat& x);
int sign_variations_inf(const std::vector<QPoly>& seq, bool plus);
// Distinct real roots in (a, b].
int count_roots(const std::vector<QPoly>& seq, const BigRat& a, const BigRat& b);
BigRat root_bound(const QPoly& p);  // every real root has |r| < bound

// A real algebraic number: either an exact rational, or the unique root of the
// square-free polynomial p inside the open interval (lo, hi).
struct RealAlg {
  QPoly p;
  std::vector<QPoly> sturm;
  BigRat lo, hi;
  bool exact = false;
  BigRat value;  // valid when exact

  static RealAlg rational(const BigRat& v);
  void refine();
  void reset_poly(const QPoly& q);  // q must still vanish at this number
  BigRat midpoint() const { return exact ? value : BigRat((lo + hi) / 2); }
};

// Sorted, isolated real roots of a nonzero polynomial.
std::vector<RealAlg> real_roots(const QPoly& p);
// Exact sign of q at the algebraic number.
int sign_at(RealAlg& a, const QPoly& q);

}  // namespace motivzeta
