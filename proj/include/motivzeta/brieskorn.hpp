#pragma once

#include <compare>
#include <string>
#include <vector>

namespace motivzeta {

struct BrieskornTerm {
  int sign = 1;  // +1 or -1
  int k = 1;     // exponent
  friend auto operator<=>(const BrieskornTerm& a, const BrieskornTerm& b) {
    if (a.k != b.k) return a.k <=> b.k;
    return a.sign <=> b.sign;
  }
  friend bool operator==(const BrieskornTerm&, const BrieskornTerm&) = default;
};

// sum_i sign_i * x_i^{k_i}, terms kept sorted by (k, sign).
class BrieskornSpec {
public:
  BrieskornSpec() = default;
  explicit BrieskornSpec(std::vector<BrieskornTerm> terms);

  const std::vector<BrieskornTerm>& terms() const { return terms_; }
  std::size_t dim() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const BrieskornTerm& operator[](std::size_t i) const { return terms_[i]; }

  BrieskornSpec negated() const;
  BrieskornSpec without(std::size_t i) const;
  BrieskornSpec joined(const BrieskornSpec& o) const;  // f(x) + g(y)
  BrieskornSpec subset(unsigned mask) const;            // terms whose bit is set
  bool has_odd() const;
  bool all_odd() const;
  std::vector<int> exponents() const;

  // "+2,-4" style list, as used inside ZeroSet[...] brackets.
  std::string list_str() const;
  // Polynomial rendering in x1..xd, e.g. "x1^3 - x2^3".
  std::string poly_str() const;
  // Parses "+2,-4" (signs mandatory).
  static BrieskornSpec parse_list(const std::string& src);

  friend auto operator<=>(const BrieskornSpec&, const BrieskornSpec&) = default;
  friend bool operator==(const BrieskornSpec&, const BrieskornSpec&) = default;

private:
  std::vector<BrieskornTerm> terms_;
};

}  // namespace motivzeta
