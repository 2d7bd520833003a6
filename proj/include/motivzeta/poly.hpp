#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivzeta/brieskorn.hpp"
#include "motivzeta/scalar.hpp"

namespace motivzeta {

using Exponent = std::vector<int>;

// Multivariate integer polynomial. Variables are kept sorted by name and every
// exponent vector has one entry per variable.
class Poly {
public:
  Poly() = default;
  Poly(std::vector<std::string> vars, std::map<Exponent, BigInt> terms);

  static Poly parse(const std::string& src);
  // Polynomial of a Brieskorn spec in variables x1..xd.
  static Poly from_brieskorn(const BrieskornSpec& s);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt constant_term() const;
  int total_degree() const;

  // Tagged when every monomial is c*v^k in its own variable, c = +-1.
  std::optional<BrieskornSpec> brieskorn() const;
  // Same shape but arbitrary nonzero coefficients (only signs are kept).
  std::optional<BrieskornSpec> brieskorn_shape() const;

  // Restriction to the given exponent vectors (same variables).
  Poly restricted(const std::vector<Exponent>& keep) const;
  // Drops variables that no monomial uses.
  Poly compressed() const;
  Poly negated() const;
  Poly plus_constant(const BigInt& c) const;

  std::string str() const;
  friend bool operator==(const Poly&, const Poly&) = default;
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    return a.terms_ < b.terms_;
  }

private:
  std::vector<std::string> vars_;
  std::map<Exponent, BigInt> terms_;
};

}  // namespace motivzeta
