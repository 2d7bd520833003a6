#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "motivzeta/brieskorn.hpp"
#include "motivzeta/scalar.hpp"

namespace motivzeta {

// Observables of the modified zeta coefficients a_n used by the recovery. Each
// query throws OracleUndefined when its precondition fails.
class ZetaOracle {
public:
  virtual ~ZetaOracle() = default;
  // deg beta(forget(a_n)), defined when a_n is a nonzero scalar multiple of unit.
  virtual BigInt degF(const BigInt& n) = 0;
  // deg beta(F+(a_n2)) - deg beta(F+(a_n1)), defined when both coefficients share
  // their non-scalar part and chi_c(F+) of that part is nonzero.
  virtual BigInt degDiffPlus(const BigInt& n1, const BigInt& n2) = 0;
  // chi_c(F+(a_n)).
  virtual BigRat chiPlus(const BigInt& n) = 0;
  std::size_t queries() const { return queries_; }

protected:
  std::size_t queries_ = 0;
};

// One coefficient as stored in a dump file.
struct CoefficientRecord {
  BigInt n;
  BigInt shift;          // a_n = L^{-shift} * alpha
  std::string alpha;     // class expression
  bool pure = false;     // alpha is a nonzero multiple of unit
  BigInt degF;           // valid when pure
  BigRat chiPlus;
};

// Answers from the closed-form coefficients of a known Brieskorn polynomial.
class BrieskornOracle : public ZetaOracle {
public:
  explicit BrieskornOracle(BrieskornSpec spec);
  BigInt degF(const BigInt& n) override;
  BigInt degDiffPlus(const BigInt& n1, const BigInt& n2) override;
  BigRat chiPlus(const BigInt& n) override;
  const CoefficientRecord& record(const BigInt& n);
  // Every coefficient queried so far, in index order.
  std::vector<CoefficientRecord> records() const;

private:
  BrieskornSpec spec_;
  std::map<BigInt, CoefficientRecord> cache_;
};

// Replays a dump produced by BrieskornOracle; unknown indices are undefined.
class DumpOracle : public ZetaOracle {
public:
  explicit DumpOracle(std::vector<CoefficientRecord> records);
  BigInt degF(const BigInt& n) override;
  BigInt degDiffPlus(const BigInt& n1, const BigInt& n2) override;
  BigRat chiPlus(const BigInt& n) override;

private:
  const CoefficientRecord& get(const BigInt& n);
  std::map<BigInt, CoefficientRecord> records_;
};

std::string dump_records(const std::vector<CoefficientRecord>& records);
std::vector<CoefficientRecord> parse_records(const std::string& json_text);

// ---- the case engine ----

struct RecoveryState {
  std::int64_t K = 0;
  std::vector<std::int64_t> primes;              // padded to contain 2, 3, 5, 7
  std::map<std::int64_t, int> gamma;             // largest e with p^e <= K, padded
  std::vector<std::int64_t> Q;                   // sorted
  std::map<std::int64_t, std::int64_t> mult;     // filled by recover_exponents
};
RecoveryState make_state(std::int64_t K);

// What the argument asserts about the elements of Q dividing n + offset:
// exactly `set` (or the divisors of A), or at least `set`.
struct DivisibilityClaim {
  int offset = 0;
  bool exact = true;
  bool divisors_of_A = false;
  std::vector<std::int64_t> set;
};

struct CaseInstance {
  std::string name;
  BigInt n;
  std::int64_t A = 1;  // prod p^alpha_p of the instance (capped by K)
  int lo = -1, hi = 1; // measures s(n + hi) - s(n + lo)
  bool plus = false;   // measured through F+ instead of the forgetful degree
  std::vector<DivisibilityClaim> claims;
};

// Every CRT instance of every case, in the order the argument uses them.
std::vector<CaseInstance> plan_cases(const RecoveryState& st);
// Elements of Q dividing m.
std::vector<std::int64_t> q_divisors(const RecoveryState& st, const BigInt& m);

struct RecoveryConfig {
  std::int64_t max_exponent = 64;
  std::size_t max_dim = 6;
};

std::int64_t bound_exponents(ZetaOracle& oracle, std::size_t d, const RecoveryConfig& cfg = {});

struct RecoveryResult {
  std::vector<std::int64_t> exponents;  // sorted multiset
  RecoveryState state;
  std::size_t equations = 0;
  std::size_t queries = 0;
};
RecoveryResult recover_exponents(ZetaOracle& oracle, std::size_t d, const RecoveryConfig& cfg = {});

struct ValidationReport {
  bool pass = true;
  BigInt first_divergent = 0;  // 0 when sampled coefficients agree
};
ValidationReport validate_recovery(const BrieskornSpec& spec, const std::vector<std::int64_t>& recovered);

}  // namespace motivzeta
