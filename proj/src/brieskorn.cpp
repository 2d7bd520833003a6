#include "motivzeta/brieskorn.hpp"

#include <algorithm>

#include "motivzeta/errors.hpp"
#include "motivzeta/lexer.hpp"

namespace motivzeta {

BrieskornSpec::BrieskornSpec(std::vector<BrieskornTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.sign != 1 && t.sign != -1) throw InvalidGerm("Brieskorn sign must be +1 or -1");
    if (t.k < 1) throw InvalidGerm("Brieskorn exponent must be positive");
  }
  std::sort(terms_.begin(), terms_.end());
}

BrieskornSpec BrieskornSpec::negated() const {
  std::vector<BrieskornTerm> t = terms_;
  for (auto& x : t) x.sign = -x.sign;
  return BrieskornSpec(std::move(t));
}

BrieskornSpec BrieskornSpec::without(std::size_t i) const {
  std::vector<BrieskornTerm> t = terms_;
  t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
  return BrieskornSpec(std::move(t));
}

BrieskornSpec BrieskornSpec::joined(const BrieskornSpec& o) const {
  std::vector<BrieskornTerm> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return BrieskornSpec(std::move(t));
}

BrieskornSpec BrieskornSpec::subset(unsigned mask) const {
  std::vector<BrieskornTerm> t;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (mask >> i & 1u) t.push_back(terms_[i]);
  return BrieskornSpec(std::move(t));
}

bool BrieskornSpec::has_odd() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const BrieskornTerm& t) { return t.k % 2; });
}

bool BrieskornSpec::all_odd() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const BrieskornTerm& t) { return t.k % 2; });
}

std::vector<int> BrieskornSpec::exponents() const {
  std::vector<int> e;
  for (const auto& t : terms_) e.push_back(t.k);
  return e;
}

std::string BrieskornSpec::list_str() const {
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += ",";
    s += (terms_[i].sign > 0 ? "+" : "-") + std::to_string(terms_[i].k);
  }
  return s;
}

std::string BrieskornSpec::poly_str() const {
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    bool neg = terms_[i].sign < 0;
    if (i == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += "x" + std::to_string(i + 1);
    if (terms_[i].k != 1) s += "^" + std::to_string(terms_[i].k);
  }
  return s;
}

BrieskornSpec BrieskornSpec::parse_list(const std::string& src) {
  TokenStream ts(src);
  std::vector<BrieskornTerm> t;
  while (!ts.at_end()) {
    int sign = 0;
    if (ts.accept('+'))
      sign = 1;
    else if (ts.accept('-'))
      sign = -1;
    else
      ts.fail("expected '+' or '-'");
    mpz_class k = ts.expect_int();
    if (!k.fits_sint_p() || k < 1) ts.fail("bad exponent");
    t.push_back({sign, static_cast<int>(k.get_si())});
    if (!ts.at_end()) ts.expect(',');
  }
  return BrieskornSpec(std::move(t));
}

}  // namespace motivzeta
