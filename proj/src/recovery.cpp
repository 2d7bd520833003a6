#include "motivzeta/recovery.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <nlohmann/json.hpp>

#include "motivzeta/class_expr.hpp"
#include "motivzeta/errors.hpp"
#include "motivzeta/germ.hpp"
#include "motivzeta/realization.hpp"

namespace motivzeta {

namespace {

using i64 = std::int64_t;

BigInt big(i64 v) { return BigInt(static_cast<long>(v)); }

// Degree in u of a nonzero element of Q(u).
BigInt degree(const ScalarValue& s) { return big(s.num().degree() - s.den().degree()); }

std::vector<i64> primes_upto(i64 n) {
  std::vector<i64> out;
  for (i64 p = 2; p <= n; ++p) {
    bool prime = true;
    for (i64 q : out) {
      if (q * q > p) break;
      if (p % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

BigInt floor_div(const BigInt& a, i64 b) {
  BigInt q;
  mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return q;
}

bool divides(i64 q, const BigInt& m) { return mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(q)) != 0; }

// s(n) = sum floor(n / k_i) for an exponent list.
BigInt floor_sum(const std::vector<i64>& ks, const BigInt& n) {
  BigInt s = 0;
  for (auto k : ks) s += floor_div(n, k);
  return s;
}

struct Congruence {
  BigInt r, m;
};

BigInt crt(const std::vector<Congruence>& cs) {
  BigInt x = 0, M = 1;
  for (const auto& c : cs) {
    // x + M t = c.r (mod c.m)
    BigInt inv, t;
    if (!mpz_invert(inv.get_mpz_t(), M.get_mpz_t(), c.m.get_mpz_t()))
      throw ValidationFailure("CRT moduli are not coprime");
    t = c.r - x;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), c.m.get_mpz_t());
    t = t * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), c.m.get_mpz_t());
    x += M * t;
    M *= c.m;
  }
  return x;
}

BigInt to_big(const nlohmann::json& v) {
  if (v.is_string()) return BigInt(v.get<std::string>());
  if (v.is_number_integer()) return big(v.get<i64>());
  throw SchemaError("expected an integer or a decimal string");
}

nlohmann::json from_big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Oracles

BrieskornOracle::BrieskornOracle(BrieskornSpec spec) : spec_(std::move(spec)) {}

const CoefficientRecord& BrieskornOracle::record(const BigInt& n) {
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  FactoredCoefficient c = brieskorn_factored(spec_, n);
  CoefficientRecord r;
  r.n = n;
  r.shift = c.shift;
  r.alpha = to_string(c.alpha);
  r.pure = c.alpha.is_scalar() && !c.alpha.is_zero();
  if (r.pure) r.degF = degree(beta(forget(c.alpha))) - c.shift;
  // chi_c(L^{-s}) = (-1)^s
  r.chiPlus = chi_F(c.alpha, Functor::Fplus);
  if (mpz_odd_p(c.shift.get_mpz_t())) r.chiPlus = -r.chiPlus;
  return cache_.emplace(n, std::move(r)).first->second;
}

std::vector<CoefficientRecord> BrieskornOracle::records() const {
  std::vector<CoefficientRecord> out;
  for (const auto& [n, r] : cache_) out.push_back(r);
  return out;
}

namespace {

BigInt deg_f(const CoefficientRecord& r) {
  if (!r.pure) throw OracleUndefined("a_" + r.n.get_str() + " is not a pure scalar coefficient");
  return r.degF;
}

BigInt deg_diff_plus(const CoefficientRecord& a, const CoefficientRecord& b) {
  if (a.alpha != b.alpha)
    throw OracleUndefined("a_" + a.n.get_str() + " and a_" + b.n.get_str() + " have different non-scalar parts");
  if (a.chiPlus == 0) throw OracleUndefined("chi_c(F+) vanishes on the shared part of a_" + a.n.get_str());
  // Same alpha: the degrees differ by the L-shifts only.
  return a.shift - b.shift;
}

}  // namespace

BigInt BrieskornOracle::degF(const BigInt& n) {
  ++queries_;
  return deg_f(record(n));
}

BigInt BrieskornOracle::degDiffPlus(const BigInt& n1, const BigInt& n2) {
  ++queries_;
  return deg_diff_plus(record(n1), record(n2));
}

BigRat BrieskornOracle::chiPlus(const BigInt& n) {
  ++queries_;
  return record(n).chiPlus;
}

DumpOracle::DumpOracle(std::vector<CoefficientRecord> records) {
  for (auto& r : records) records_.emplace(r.n, std::move(r));
}

const CoefficientRecord& DumpOracle::get(const BigInt& n) {
  auto it = records_.find(n);
  if (it == records_.end()) throw OracleUndefined("coefficient a_" + n.get_str() + " is not in the dump");
  return it->second;
}

BigInt DumpOracle::degF(const BigInt& n) {
  ++queries_;
  return deg_f(get(n));
}

BigInt DumpOracle::degDiffPlus(const BigInt& n1, const BigInt& n2) {
  ++queries_;
  return deg_diff_plus(get(n1), get(n2));
}

BigRat DumpOracle::chiPlus(const BigInt& n) {
  ++queries_;
  return get(n).chiPlus;
}

std::string dump_records(const std::vector<CoefficientRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["n"] = from_big(r.n);
    o["shift"] = from_big(r.shift);
    o["alpha"] = r.alpha;
    o["degF"] = r.pure ? from_big(r.degF) : nlohmann::json(nullptr);
    o["chiPlus"] = r.chiPlus.get_str();
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<CoefficientRecord> parse_records(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw SchemaError("a coefficient dump must be a JSON array");
  std::vector<CoefficientRecord> out;
  for (const auto& o : doc) {
    if (!o.is_object() || !o.contains("n") || !o.contains("shift") || !o.contains("alpha") ||
        !o.contains("degF") || !o.contains("chiPlus"))
      throw SchemaError("coefficient record needs n, shift, alpha, degF and chiPlus");
    CoefficientRecord r;
    r.n = to_big(o["n"]);
    r.shift = to_big(o["shift"]);
    if (!o["alpha"].is_string() || !o["chiPlus"].is_string())
      throw SchemaError("alpha and chiPlus must be strings");
    r.alpha = o["alpha"].get<std::string>();
    r.pure = !o["degF"].is_null();
    if (r.pure) r.degF = to_big(o["degF"]);
    try {
      r.chiPlus = BigRat(o["chiPlus"].get<std::string>());
      r.chiPlus.canonicalize();
    } catch (const std::invalid_argument&) {
      throw SchemaError("chiPlus is not a rational number");
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// State and cases

RecoveryState make_state(i64 K) {
  if (K < 2) K = 2;
  RecoveryState st;
  st.K = K;
  st.primes = primes_upto(std::max<i64>(K, 7));
  for (auto p : st.primes) {
    int g = 0;
    while (ipow(p, g + 1) <= K) ++g;
    st.gamma[p] = g;
  }
  st.gamma[2] = std::max(st.gamma[2], 3);
  st.gamma[3] = std::max(st.gamma[3], 2);
  st.gamma[5] = std::max(st.gamma[5], 1);
  st.gamma[7] = std::max(st.gamma[7], 1);
  std::vector<i64> Q{1};
  for (auto p : st.primes) {
    std::vector<i64> next;
    for (auto q : Q)
      for (int e = 0; e <= st.gamma[p]; ++e) next.push_back(q * ipow(p, e));
    Q = std::move(next);
  }
  std::sort(Q.begin(), Q.end());
  st.Q = std::move(Q);
  st.mult[1] = 0;
  return st;
}

std::vector<i64> q_divisors(const RecoveryState& st, const BigInt& m) {
  std::vector<i64> out;
  for (auto q : st.Q)
    if (q > 1 && divides(q, m)) out.push_back(q);
  return out;
}

namespace {

using Alpha = std::map<i64, int>;

struct CaseSpec {
  std::string name;
  std::function<std::pair<int, int>(i64 p, const RecoveryState&)> range;  // alpha_p bounds
  std::function<Congruence(i64 p, int a)> congruence;
  int lo, hi;
  bool plus;
  std::vector<DivisibilityClaim> claims;
};

Congruence power_class(i64 p, int a) { return {big(ipow(p, a)), big(ipow(p, a + 1))}; }
Congruence mod(i64 r, i64 m) { return {big(r), big(m)}; }

DivisibilityClaim none(int off) { return {off, true, false, {}}; }
DivisibilityClaim exactly(int off, std::vector<i64> s) { return {off, true, false, std::move(s)}; }
DivisibilityClaim at_least(int off, std::vector<i64> s) { return {off, false, false, std::move(s)}; }
DivisibilityClaim div_a() { return {0, true, true, {}}; }

std::pair<int, int> fixed(int a) { return {a, a}; }

std::vector<CaseSpec> case_specs() {
  auto gam = [](i64 p, const RecoveryState& st) { return st.gamma.at(p); };
  std::vector<CaseSpec> cs;

  // n = p^alpha_p (mod p^{alpha_p + 1}), 2 mod the other primes: n -+ 1 avoid Q.
  cs.push_back({"6|q equations",
                [gam](i64 p, const RecoveryState& st) {
                  if (p == 2 || p == 3) return std::pair<int, int>{1, gam(p, st)};
                  return std::pair<int, int>{0, gam(p, st)};
                },
                [](i64 p, int a) { return a > 0 ? power_class(p, a) : mod(2, p); },
                -1, 1, false, {none(-1), none(1), div_a()}});

  cs.push_back({"mult 2",
                [](i64 p, const RecoveryState&) {
                  return fixed(p == 2 ? 2 : (p == 3 || p == 5) ? 1 : 0);
                },
                [](i64 p, int a) { return a > 0 ? power_class(p, a) : mod(3, p); },
                -2, 2, true, {div_a(), none(-1), none(1), exactly(-2, {2}), exactly(2, {2})}});

  // The two endpoints share the factor coming from exponent 2, which the
  // forgetful morphism sends to zero, so the difference is read through F+.
  cs.push_back({"2,3 do not divide q",
                [gam](i64 p, const RecoveryState& st) {
                  if (p == 2 || p == 3) return fixed(0);
                  return std::pair<int, int>{0, gam(p, st)};
                },
                [](i64 p, int a) {
                  if (p == 2) return mod(1, 8);
                  return a > 0 ? power_class(p, a) : mod(1, p);
                },
                -3, 1, true,
                {div_a(), exactly(1, {2}), exactly(-3, {2}), none(-2), at_least(-1, {2, 3, 6})}});

  cs.push_back({"mult 3 + mult 4",
                [](i64, const RecoveryState&) { return fixed(0); },
                [](i64 p, int) {
                  switch (p) {
                    case 2: return mod(4, 8);
                    case 3: return mod(4, 9);
                    case 5: return mod(4, 25);
                    case 7: return mod(5, 7);
                    default: return mod(4, p);
                  }
                },
                -3, 3, false,
                {exactly(0, {2, 4}), exactly(-1, {3}), exactly(1, {5}), exactly(-2, {2}),
                 at_least(2, {2, 3, 6}), none(-3), none(3)}});

  cs.push_back({"2 mult 3 + mult 4",
                [](i64 p, const RecoveryState&) {
                  switch (p) {
                    case 2: return fixed(3);
                    case 3: return fixed(2);
                    case 5:
                    case 7: return fixed(1);
                    default: return fixed(0);
                  }
                },
                [](i64 p, int a) { return a > 0 ? power_class(p, a) : mod(5, p); },
                -4, 4, true,
                {at_least(0, {8, 9, 5, 7}), none(-1), none(1), exactly(-2, {2}), exactly(2, {2}),
                 exactly(-3, {3}), exactly(3, {3}), exactly(-4, {2, 4}), exactly(4, {2, 4})}});

  cs.push_back({"2|q, 4,3,5 do not divide q",
                [gam](i64 p, const RecoveryState& st) {
                  if (p == 2) return fixed(1);
                  if (p == 3 || p == 5) return fixed(0);
                  return std::pair<int, int>{0, gam(p, st)};
                },
                [](i64 p, int a) {
                  switch (p) {
                    case 2: return mod(2, 8);
                    case 3: return mod(2, 9);
                    case 5: return mod(6, 25);
                    case 7: return a > 0 ? power_class(p, a) : mod(2, 7);
                    default: return a > 0 ? power_class(p, a) : mod(4, p);
                  }
                },
                -3, 3, false,
                {div_a(), exactly(-1, {5}), exactly(1, {3}), exactly(2, {2, 4}), none(-3), none(3),
                 at_least(-2, {2, 3, 6})}});

  cs.push_back({"4|q, 3,5 do not divide q",
                [gam](i64 p, const RecoveryState& st) {
                  if (p == 2) return std::pair<int, int>{2, gam(p, st)};
                  if (p == 3 || p == 5) return fixed(0);
                  return std::pair<int, int>{0, gam(p, st)};
                },
                [](i64 p, int a) {
                  switch (p) {
                    case 2: return power_class(p, a);
                    case 3: return mod(2, 9);
                    case 5: return mod(6, 25);
                    case 7: return a > 0 ? power_class(p, a) : mod(2, 7);
                    default: return a > 0 ? power_class(p, a) : mod(4, p);
                  }
                },
                -3, 3, false,
                {div_a(), exactly(-1, {5}), exactly(1, {3}), exactly(2, {2}), none(-3), none(3),
                 at_least(-2, {2, 3, 6})}});

  cs.push_back({"2|q, 5|q, 4,3 do not divide q",
                [gam](i64 p, const RecoveryState& st) {
                  if (p == 2) return fixed(1);
                  if (p == 3) return fixed(0);
                  if (p == 5) return std::pair<int, int>{1, gam(p, st)};
                  return std::pair<int, int>{0, gam(p, st)};
                },
                [](i64 p, int a) {
                  if (p == 2) return mod(2, 8);
                  if (p == 3) return mod(2, 9);
                  return a > 0 ? power_class(p, a) : mod(3, p);
                },
                -1, 3, false, {div_a(), exactly(1, {3}), exactly(2, {2, 4}), none(-1), none(3)}});

  cs.push_back({"4|q, 5|q, 3 does not divide q",
                [gam](i64 p, const RecoveryState& st) {
                  if (p == 2) return std::pair<int, int>{2, gam(p, st)};
                  if (p == 3) return fixed(0);
                  if (p == 5) return std::pair<int, int>{1, gam(p, st)};
                  return std::pair<int, int>{0, gam(p, st)};
                },
                [](i64 p, int a) {
                  if (p == 3) return mod(2, 9);
                  return a > 0 ? power_class(p, a) : mod(3, p);
                },
                -1, 3, false, {div_a(), exactly(1, {3}), exactly(2, {2}), none(-1), none(3)}});

  cs.push_back({"3|q, 2,5 do not divide q",
                [gam](i64 p, const RecoveryState& st) {
                  if (p == 2 || p == 5) return fixed(0);
                  if (p == 3) return std::pair<int, int>{1, gam(p, st)};
                  return std::pair<int, int>{0, gam(p, st)};
                },
                [](i64 p, int a) {
                  if (p == 2) return mod(3, 8);
                  if (p == 5) return mod(4, 25);
                  return a > 0 ? power_class(p, a) : mod(3, p);
                },
                -2, 2, false,
                {div_a(), exactly(-1, {2}), exactly(1, {2, 4, 5, 10, 20}), none(-2), none(2)}});

  cs.push_back({"3|q, 5|q, 2 does not divide q",
                [gam](i64 p, const RecoveryState& st) {
                  if (p == 2) return fixed(0);
                  if (p == 3 || p == 5) return std::pair<int, int>{1, gam(p, st)};
                  return std::pair<int, int>{0, gam(p, st)};
                },
                [](i64 p, int a) {
                  if (p == 2) return mod(3, 8);
                  return a > 0 ? power_class(p, a) : mod(3, p);
                },
                -2, 2, false, {div_a(), exactly(-1, {2}), exactly(1, {2, 4}), none(-2), none(2)}});
  return cs;
}

}  // namespace

std::vector<CaseInstance> plan_cases(const RecoveryState& st) {
  std::vector<CaseInstance> out;
  for (const auto& cs : case_specs()) {
    std::vector<std::pair<int, int>> ranges;
    for (auto p : st.primes) ranges.push_back(cs.range(p, st));
    Alpha a;
    for (std::size_t i = 0; i < st.primes.size(); ++i) a[st.primes[i]] = ranges[i].first;
    while (true) {
      std::vector<Congruence> cong;
      BigInt M = 1;
      i64 A = 1;
      for (auto p : st.primes) {
        cong.push_back(cs.congruence(p, a[p]));
        M *= cong.back().m;
        A *= ipow(p, a[p]);
      }
      BigInt n = crt(cong);
      // Every queried index must stay positive; take the next solution otherwise.
      int down = std::max(-cs.lo, 1);
      while (n - down < 1) n += M;
      out.push_back({cs.name, n, A, cs.lo, cs.hi, cs.plus, cs.claims});
      std::size_t i = 0;
      for (; i < st.primes.size(); ++i) {
        i64 p = st.primes[i];
        if (a[p] < ranges[i].second) {
          ++a[p];
          break;
        }
        a[p] = ranges[i].first;
      }
      if (i == st.primes.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bound on the exponents

std::int64_t bound_exponents(ZetaOracle& oracle, std::size_t d, const RecoveryConfig& cfg) {
  if (d < 1) throw InvalidGerm("dimension must be at least 1");
  if (d > cfg.max_dim) throw UnsupportedDimension("recovery is configured for d <= " + std::to_string(cfg.max_dim));
  const i64 cap = cfg.max_exponent;
  auto s_at = [&oracle](const BigInt& n) -> std::optional<BigInt> {
    try {
      return 1 - oracle.degF(n);
    } catch (const OracleUndefined&) {
      return std::nullopt;
    }
  };
  std::vector<i64> primes = primes_upto(64 * cap);
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    i64 p = primes[pi];
    auto sp = s_at(big(p));
    if (!sp || *sp < 1) continue;
    // Nondecreasing tuples in [2, cap] with sum floor(p / l_i) = s_p; this pins
    // sum 1/l_i to [s_p/p, (s_p + d)/p).
    std::vector<std::vector<i64>> cands;
    std::vector<i64> cur;
    bool overflow = false;
    std::function<void(i64, BigInt)> rec = [&](i64 from, BigInt left) {
      if (overflow) return;
      std::size_t r = d - cur.size();
      if (r == 0) {
        if (left == 0) cands.push_back(cur);
        if (cands.size() > 200000) overflow = true;
        return;
      }
      for (i64 l = from; l <= cap; ++l) {
        BigInt f = floor_div(big(p), l);
        if (f * static_cast<long>(r) < left) break;  // larger l only lowers the sum
        if (floor_div(big(p), cap) * static_cast<long>(r) > left) return;
        cur.push_back(l);
        rec(l, left - f);
        cur.pop_back();
      }
    };
    rec(2, *sp);
    if (overflow) continue;
    if (cands.empty()) throw InconsistentOracle("no exponent tuple matches a_" + std::to_string(p));
    // Further pure samples just above p, until one candidate is left.
    BigInt n = big(p);
    for (i64 step = 0; step < 4 * cap && cands.size() > 1; ++step) {
      n += 1;
      auto sn = s_at(n);
      if (!sn) continue;
      std::erase_if(cands, [&](const std::vector<i64>& c) { return floor_sum(c, n) != *sn; });
      if (cands.empty()) throw InconsistentOracle("no exponent tuple matches a_" + n.get_str());
    }
    i64 K = 0;
    for (const auto& c : cands) K = std::max(K, c.back());
    return K;
  }
  throw OracleUndefined("no usable prime index below " + std::to_string(64 * cap));
}

// ---------------------------------------------------------------------------
// Recovery

namespace {

// Exact sparse Gauss-Jordan elimination; returns the unique solution or throws.
// Rows are short (only q dividing a few window indices appear), so pivoting on
// the shortest remaining row keeps fill-in small.
using SparseRow = std::map<std::size_t, BigRat>;

std::vector<BigRat> solve(std::vector<SparseRow> rows, std::vector<BigRat> rhs, std::size_t n) {
  std::vector<std::set<std::size_t>> col_rows(n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) col_rows[c].insert(i);
  std::set<std::pair<std::size_t, std::size_t>> active;  // (length, row)
  for (std::size_t i = 0; i < rows.size(); ++i) active.insert({rows[i].size(), i});
  std::vector<std::ptrdiff_t> pivot_row(n, -1);
  while (!active.empty()) {
    std::size_t r = active.begin()->second;
    active.erase(active.begin());
    if (rows[r].empty()) {
      if (rhs[r] != 0) throw InconsistentOracle("the case equations are contradictory");
      continue;
    }
    std::size_t c = rows[r].begin()->first;
    for (const auto& [j, v] : rows[r])
      if (col_rows[j].size() < col_rows[c].size()) c = j;
    BigRat inv = 1 / rows[r][c];
    for (auto& [j, v] : rows[r]) v *= inv;
    rhs[r] *= inv;
    pivot_row[c] = static_cast<std::ptrdiff_t>(r);
    std::vector<std::size_t> targets(col_rows[c].begin(), col_rows[c].end());
    for (std::size_t i : targets) {
      if (i == r) continue;
      bool is_active = active.erase({rows[i].size(), i}) > 0;
      BigRat f = rows[i][c];
      for (const auto& [j, v] : rows[r]) {
        BigRat& x = rows[i][j];
        x -= f * v;
        if (x == 0) {
          rows[i].erase(j);
          col_rows[j].erase(i);
        } else {
          col_rows[j].insert(i);
        }
      }
      rhs[i] -= f * rhs[r];
      if (is_active) active.insert({rows[i].size(), i});
    }
  }
  std::vector<BigRat> x(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_row[c] < 0 || rows[pivot_row[c]].size() != 1)
      throw ValidationFailure("the case equations leave some multiplicities undetermined");
    x[c] = rhs[pivot_row[c]];
  }
  return x;
}

}  // namespace

RecoveryResult recover_exponents(ZetaOracle& oracle, std::size_t d, const RecoveryConfig& cfg) {
  RecoveryResult res;
  i64 K = bound_exponents(oracle, d, cfg);
  res.state = make_state(K);
  RecoveryState& st = res.state;
  std::vector<i64> unknowns(st.Q.begin() + 1, st.Q.end());  // mult(1) = 0
  std::vector<SparseRow> rows;
  std::vector<BigRat> rhs;
  for (const auto& inst : plan_cases(st)) {
    BigInt n1 = inst.n + inst.lo, n2 = inst.n + inst.hi;
    BigInt D;
    if (inst.plus)
      D = -oracle.degDiffPlus(n1, n2);
    else
      D = oracle.degF(n1) - oracle.degF(n2);
    SparseRow row;
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
      BigInt c = floor_div(n2, unknowns[i]) - floor_div(n1, unknowns[i]);
      if (c != 0) row[i] = c;
    }
    rows.push_back(std::move(row));
    rhs.emplace_back(D);
  }
  res.equations = rows.size();
  std::vector<BigRat> x = solve(std::move(rows), std::move(rhs), unknowns.size());
  i64 total = 0;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (x[i].get_den() != 1 || x[i] < 0)
      throw InconsistentOracle("mult(" + std::to_string(unknowns[i]) + ") = " + x[i].get_str() +
                               " is not a nonnegative integer");
    i64 m = x[i].get_num().get_si();
    st.mult[unknowns[i]] = m;
    total += m;
    for (i64 j = 0; j < m; ++j) res.exponents.push_back(unknowns[i]);
  }
  if (total != static_cast<i64>(d))
    throw InconsistentOracle("multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(d));

  // Round trip on sampled pure coefficients.
  int checked = 0;
  for (BigInt n = 1; checked < 10 && n < 100000; ++n) {
    BigInt dg;
    try {
      dg = oracle.degF(n);
    } catch (const OracleUndefined&) {
      continue;
    }
    ++checked;
    if (1 - dg != floor_sum(res.exponents, n))
      throw ValidationFailure("recovered exponents disagree with a_" + n.get_str());
  }
  res.queries = oracle.queries();
  return res;
}

ValidationReport validate_recovery(const BrieskornSpec& spec, const std::vector<i64>& recovered) {
  ValidationReport rep;
  std::vector<i64> truth;
  for (const auto& t : spec.terms()) truth.push_back(t.k);
  std::vector<i64> rec = recovered;
  std::sort(truth.begin(), truth.end());
  std::sort(rec.begin(), rec.end());
  rep.pass = truth == rec;
  std::vector<BrieskornTerm> terms;
  for (auto k : rec) terms.push_back({1, static_cast<int>(k)});
  BrieskornOracle a(spec), b{BrieskornSpec(terms)};
  for (long n = 1; n <= 10; ++n) {
    const auto& ra = a.record(BigInt(n));
    const auto& rb = b.record(BigInt(n));
    if (ra.pure != rb.pure || (ra.pure && ra.degF != rb.degF)) {
      rep.first_divergent = n;
      rep.pass = false;
      break;
    }
  }
  return rep;
}

}  // namespace motivzeta
