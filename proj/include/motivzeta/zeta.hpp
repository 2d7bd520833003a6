#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motivzeta/motive.hpp"
#include "motivzeta/realization.hpp"

namespace motivzeta {

// Truncated series sum_{n=1}^{N} a_n T^n with class coefficients.
class ZetaSeries {
public:
  ZetaSeries() = default;
  explicit ZetaSeries(int order) : c_(static_cast<std::size_t>(order)) {}

  int order() const { return static_cast<int>(c_.size()); }
  const MotClass& operator[](int n) const { return c_.at(static_cast<std::size_t>(n - 1)); }
  MotClass& operator[](int n) { return c_.at(static_cast<std::size_t>(n - 1)); }
  ZetaSeries truncated(int order) const;

  ZetaSeries operator-() const;
  ZetaSeries& operator+=(const ZetaSeries& o);
  friend bool operator==(const ZetaSeries& a, const ZetaSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZetaSeries& a, const ZetaSeries& b) { return !(a == b); }

  std::string str() const;

private:
  std::vector<MotClass> c_;
};

// One factor of an sr-form: x/(1 - x) (I-form) or 1/(1 - x) (J-form), x = L^{-nu} T^N.
struct SrFactor {
  std::int64_t nu = 0;
  std::int64_t N = 1;
  bool i_form = true;
  friend auto operator<=>(const SrFactor&, const SrFactor&) = default;
};

struct SrTerm {
  MotClass coeff;
  std::int64_t tshift = 0;             // extra T^tshift
  std::vector<SrFactor> factors;       // kept sorted
  std::vector<std::int64_t> pureL;     // 1/(1 - L^{-c}) factors, kept sorted
};

class RationalZeta {
public:
  RationalZeta() = default;
  void add(SrTerm t);  // merges with an existing term of the same shape
  const std::vector<SrTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::string str() const;
  std::int64_t comparison_order() const;  // order used by rational_equal

private:
  std::vector<SrTerm> terms_;
};

ZetaSeries expand(const RationalZeta& r, int order);
ZetaSeries hadamard(const ZetaSeries& a, const ZetaSeries& b);
ZetaSeries naive_of(const ZetaSeries& z);
enum class TransformDir { toModified, toPlain };
ZetaSeries modified_transform(const ZetaSeries& z, TransformDir dir);

// Value at T = infinity. Terms with J-forms vanish unless an explicit T^r prefactor
// balances their degree, in which case the leading behaviour is kept.
MotClass limit_at_infinity(const RationalZeta& r);

struct MilnorFiber {
  MotClass value;
};
MilnorFiber milnor_from_limit(const RationalZeta& z);  // -lim

bool rational_equal(const RationalZeta& a, const RationalZeta& b);

// Hadamard product of sr-forms whose terms carry a single I-form factor and no
// shift: x1^a/(1-x1^a) ⊛ x2^b/(1-x2^b) with period lcm.
RationalZeta hadamard_rational(const RationalZeta& a, const RationalZeta& b);

// ---- realized series ----

enum class Invariant { chi_c, beta };
const char* invariant_name(Invariant v);

// A realized coefficient: rational number (chi_c) or element of Q(u) (beta).
using Realized = ScalarValue;

Realized realize(const MotClass& x, Invariant v, Functor f);
std::vector<Realized> realize_series(const ZetaSeries& z, Invariant v, Functor f);
std::string realized_str(const Realized& x, Invariant v);

struct RealizedTerm {
  Realized coeff;
  std::int64_t tshift = 0;
  std::vector<SrFactor> factors;
};

struct RealizedRational {
  Invariant inv = Invariant::chi_c;
  std::vector<RealizedTerm> terms;
  std::string str() const;
  std::vector<Realized> expand(int order) const;
};

RealizedRational realize_rational(const RationalZeta& r, Invariant v, Functor f);

}  // namespace motivzeta
