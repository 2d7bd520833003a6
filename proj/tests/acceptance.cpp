// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "golden.hpp"
#include "motivzeta/class_expr.hpp"
#include "motivzeta/errors.hpp"
#include "motivzeta/germ.hpp"
#include "motivzeta/newton.hpp"
#include "motivzeta/realization.hpp"
#include "motivzeta/recovery.hpp"
#include "motivzeta/resolution.hpp"
#include "test_util.hpp"

using namespace motivzeta;

namespace {

ScalarValue L(std::int64_t k = 1) { return ScalarValue::L(k); }
MotClass unit() { return MotClass::unit(); }

const BrieskornSpec kCubes({{1, 3}, {-1, 3}});
const std::string kFixture = golden::data_dir() + "/x3y3_resolution.json";

const Functor kAllFunctors[] = {Functor::forget, Functor::Fplus, Functor::Fminus, Functor::Fpos, Functor::Fneg};
const Functor kBetaFunctors[] = {Functor::forget, Functor::Fplus, Functor::Fminus};

// Collects failures of one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
};

// ---- shared builders ----

RationalZeta displayed_zf() {
  RationalZeta r;
  r.add({unit().scaled(L()), 0, {{2, 3, true}}, {}});
  r.add({unit().scaled(L() - 1), 0, {{1, 1, true}, {2, 3, true}}, {}});
  return r;
}

RationalZeta displayed_modified() {
  RationalZeta r;
  r.add({-unit(), 1, {{2, 3, false}}, {}});
  r.add({-unit(), 2, {{2, 3, false}}, {}});
  return r;
}

ZetaSeries conv_route(const BrieskornSpec& s, int order) {
  return modified_transform(brieskorn_modified_series(s, order), TransformDir::toPlain);
}

// Series of a t^3/(1 - x^2 t^3) + b t^3/(1 - x^2 t^3) * x t/(1 - x t) with x = y^-1,
// the shape of every displayed realized form of x^3 - y^3.
std::vector<ScalarValue> two_part(const ScalarValue& a, const ScalarValue& b, const ScalarValue& y, int order) {
  auto pw = [&](int e) {
    ScalarValue p(1);
    for (int i = 0; i < std::abs(e); ++i) p = p * y;
    return e < 0 ? ScalarValue(1) / p : p;
  };
  std::vector<ScalarValue> out(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) {
    ScalarValue r(0);
    if (n % 3 == 0) r = r + a * pw(-2 * (n / 3));
    for (int i = 1; 3 * i < n; ++i) r = r + b * pw(-2 * i - (n - 3 * i));
    out[static_cast<std::size_t>(n - 1)] = r;
  }
  return out;
}

// a T^3/(1 - T^3) + b T^3/(1 - T^3) * T/(1 + T), read literally.
std::vector<ScalarValue> chi_literal(long a, long b, int order) {
  std::vector<ScalarValue> out(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) {
    long r = n % 3 == 0 ? a : 0;
    for (int i = 1; 3 * i < n; ++i) r += b * ((n - 3 * i) % 2 ? 1 : -1);
    out[static_cast<std::size_t>(n - 1)] = ScalarValue(r);
  }
  return out;
}

int first_mismatch(const std::vector<ScalarValue>& a, const std::vector<ScalarValue>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return static_cast<int>(i) + 1;
  return a.size() == b.size() ? 0 : static_cast<int>(std::min(a.size(), b.size())) + 1;
}

// ---- criterion 1 ----

Check criterion1() {
  Check c;
  RationalZeta res = evaluate_rationality(load_resolution(kFixture));
  c.expect(rational_equal(res, displayed_zf()), "resolution route: " + res.str());
  RationalZeta mod = brieskorn_rational_form(kCubes);
  c.expect(rational_equal(mod, displayed_modified()), "convolution route modified form: " + mod.str());
  c.expect(conv_route(kCubes, 30) == expand(displayed_zf(), 30), "inverse transform differs from Z_f to order 30");
  const int N = 40;
  ZetaSeries r = expand(res, N), nw = expand(guibert_zeta(Poly::parse("x^3 - y^3")), N), cv = conv_route(kCubes, N);
  for (Functor f : kAllFunctors) {
    auto a = realize_series(r, Invariant::chi_c, f);
    c.expect(a == realize_series(nw, Invariant::chi_c, f), std::string("newton chi_c ") + functor_name(f));
    c.expect(a == realize_series(cv, Invariant::chi_c, f), std::string("convolution chi_c ") + functor_name(f));
  }
  for (Functor f : kBetaFunctors) {
    auto a = realize_series(r, Invariant::beta, f);
    c.expect(a == realize_series(nw, Invariant::beta, f), std::string("newton beta ") + functor_name(f));
    c.expect(a == realize_series(cv, Invariant::beta, f), std::string("convolution beta ") + functor_name(f));
  }
  return c;
}

// ---- criterion 2 ----

Check criterion2() {
  Check c;
  const int N = 30;
  auto all = realized_zetas(load_resolution(kFixture));
  auto get = [&](const std::string& name) {
    for (const auto& e : all)
      if (e.name == name && e.value) return e.value->expand(N);
    return std::vector<ScalarValue>{};
  };
  const ScalarValue u = L();
  struct Want {
    std::string name;
    std::vector<ScalarValue> literal;
    std::string shown;
  };
  std::vector<Want> wants = {
      {"beta", two_part(u * (u - 1), (u - 1) * (u - 1), u, N), "u(u-1)u^-2T^3/(1-u^-2T^3) + (u-1)^2 ..."},
      {"beta,+", two_part(u, u - 1, u, N), "u u^-2T^3/(1-u^-2T^3) + (u-1) ..."},
      {"beta,-", two_part(u, u - 1, u, N), "u u^-2T^3/(1-u^-2T^3) + (u-1) ..."},
      {"chi_c", chi_literal(2, 4, N), "2T^3/(1-T^3) + 4 T^3/(1-T^3) T/(1+T)"},
      {"chi_c,>", chi_literal(1, 2, N), "T^3/(1-T^3) + 2 T^3/(1-T^3) T/(1+T)"},
      {"chi_c,<", chi_literal(1, 2, N), "T^3/(1-T^3) + 2 T^3/(1-T^3) T/(1+T)"},
  };
  for (const auto& w : wants) {
    auto got = get(w.name);
    int m = first_mismatch(got, w.literal);
    Invariant inv = w.name.rfind("beta", 0) == 0 ? Invariant::beta : Invariant::chi_c;
    if (m == 0) continue;
    std::ostringstream os;
    os << "Z^{" << w.name << "} differs from the displayed " << w.shown << " at T^" << m;
    if (m <= static_cast<int>(got.size()))
      os << ": computed " << realized_str(got[static_cast<std::size_t>(m - 1)], inv) << ", displayed "
         << realized_str(w.literal[static_cast<std::size_t>(m - 1)], inv);
    c.expect(false, os.str());
  }
  if (!c.failures.empty()) {
    // Independent arbiter: the chi_c shadow of the transform identity with the
    // displayed modified zeta -(T + T^2)/(1 - L^-2 T^3), realized to 2(T + T^2)/(1 - T^3).
    auto holds = [&](const std::vector<ScalarValue>& z) {
      auto zt = realize_series(expand(displayed_modified(), N), Invariant::chi_c, Functor::forget);
      ScalarValue lhs(1);
      for (int n = 1; n <= N; ++n) {
        lhs = lhs - z[static_cast<std::size_t>(n - 1)];
        ScalarValue rhs(n % 2 ? -1 : 1);
        for (int j = 1; j <= n; ++j) rhs = rhs + zt[static_cast<std::size_t>(j - 1)] * ScalarValue((n - j) % 2 ? -1 : 1);
        if (lhs != rhs) return false;
      }
      return true;
    };
    c.failures.push_back(std::string("analysis: chi_c(L) = -1 turns L^-1 T/(1 - L^-1 T) into -T/(1 + T); ") +
                         "transform identity with the displayed chi_c form: " +
                         (holds(chi_literal(2, 4, N)) ? "holds" : "fails") +
                         ", with the computed form: " + (holds(get("chi_c")) ? "holds" : "fails"));
  }
  return c;
}

// ---- criterion 3 ----

Check criterion3() {
  Check c;
  std::mt19937 g(301);
  const int cases = 500;
  for (int i = 0; i < cases; ++i) {
    MotClass x = mzt::random_class(g), y = mzt::random_class(g), z = mzt::random_class(g);
    c.expect(convolve(x, y) == convolve(y, x), "commutativity " + to_string(x) + " | " + to_string(y));
    c.expect(convolve(convolve(x, y), z) == convolve(x, convolve(y, z)), "associativity");
    c.expect(convolve(unit(), x) == x, "unit " + to_string(x));
    MotClass xy = convolve(x, y);
    for (Functor f : {Functor::Fplus, Functor::Fminus})
      c.expect(chi_F(xy, f) == chi_F(x, f) * chi_F(y, f), std::string("multiplicative ") + functor_name(f));
    for (Functor f : {Functor::Fpos, Functor::Fneg})
      c.expect(chi_F(xy, f) == -chi_F(x, f) * chi_F(y, f), std::string("anti-multiplicative ") + functor_name(f));
    c.expect(chi_F(x, Functor::Fpos) == -chi_F(x, Functor::Fplus), "chi(F>) = -chi(F+)");
  }
  const int N = 50;
  for (int i = 0; i < cases; ++i) {
    BrieskornSpec s = mzt::random_spec(g, 1, 2, 2, 7);
    ZetaSeries z = conv_route(s, N);
    ZetaSeries zt = modified_transform(z, TransformDir::toModified);
    c.expect(modified_transform(zt, TransformDir::toPlain) == z, "round trip " + s.list_str());
    ZetaSeries zn = naive_of(z), tn = naive_of(zt);
    MotClass rhs = unit();
    for (int n = 1; n <= N; ++n) {
      rhs -= zn[n];
      MotClass lhs = unit().scaled(L(-n));
      for (int j = 1; j <= n; ++j) lhs -= tn[j].scaled(L(-(n - j) - 1));
      if (lhs != rhs) {
        c.expect(false, "naive transform identity " + s.list_str() + " at T^" + std::to_string(n));
        break;
      }
    }
    auto zc = realize_series(z, Invariant::chi_c, Functor::forget);
    auto tc = realize_series(zt, Invariant::chi_c, Functor::forget);
    BigRat lhs = 1;
    for (int n = 1; n <= N; ++n) {
      lhs -= chi_c(zc[static_cast<std::size_t>(n - 1)]);
      BigRat r = n % 2 ? -1 : 1;
      for (int j = 1; j <= n; ++j) r += chi_c(tc[static_cast<std::size_t>(j - 1)]) * ((n - j) % 2 ? -1 : 1);
      if (lhs != r) {
        c.expect(false, "chi_c transform identity " + s.list_str() + " at T^" + std::to_string(n));
        break;
      }
    }
  }
  return c;
}

// ---- criterion 4 ----

Check criterion4() {
  Check c;
  std::mt19937 g(401);
  const int N = 40;
  for (int i = 0; i < 20; ++i) {
    BrieskornSpec a = mzt::random_spec(g, 1, 2, 2, 7), b = mzt::random_spec(g, 1, 2, 2, 7);
    ThomSebastianiReport rep = verify_thom_sebastiani(a, b, N);
    c.expect(rep.pass, "series identity " + a.list_str() + " | " + b.list_str() + " diverges at T^" +
                           std::to_string(rep.first_divergent));
    // Milnor fibers from the rational forms, independent of the product formula.
    auto from_limit = [](const BrieskornSpec& s) { return unit() - limit_at_infinity(brieskorn_rational_form(s)); };
    MotClass sa = from_limit(a), sb = from_limit(b), sab = from_limit(a.joined(b));
    c.expect(sab == sa + sb - convolve(sa, sb), "Milnor identity " + a.list_str() + " | " + b.list_str());
  }
  MotClass s1 = milnor_fiber_brieskorn(kCubes).value;
  MotClass s2 = milnor_fiber_newton(Poly::parse("x^3 - y^3")).value;
  MotClass s3 = milnor_fiber_resolution(load_resolution(kFixture)).value;
  c.expect(s1 == unit() && s2 == unit() && s3 == unit(),
           "S(x^3 - y^3): " + to_string(s1) + ", " + to_string(s2) + ", " + to_string(s3));
  return c;
}

// ---- criterion 5 ----

std::int64_t dot(const IVec& a, const IVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void for_each_positive(std::size_t d, std::int64_t bound, const std::function<void(const IVec&)>& fn) {
  IVec k(d, 1);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == d) {
      fn(k);
      return;
    }
    for (std::int64_t v = 1; v <= left - static_cast<std::int64_t>(d - i - 1); ++v) {
      k[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, bound);
}

// Random polynomial without constant term in which every variable occurs.
Poly random_poly(std::mt19937& g) {
  static const char* names[] = {"x", "y", "z"};
  for (;;) {
    int d = mzt::uniform(g, 2, 3), terms = mzt::uniform(g, 2, 4);
    std::string src;
    std::vector<bool> used(static_cast<std::size_t>(d));
    for (int t = 0; t < terms; ++t) {
      std::string mono;
      for (int v = 0; v < d; ++v) {
        int e = mzt::uniform(g, 0, 4);
        if (!e) continue;
        used[static_cast<std::size_t>(v)] = true;
        mono += (mono.empty() ? "" : "*") + std::string(names[v]) + (e > 1 ? "^" + std::to_string(e) : "");
      }
      if (mono.empty()) continue;
      src += (src.empty() ? "" : (mzt::uniform(g, 0, 1) ? " + " : " - ")) + mono;
    }
    if (src.empty() || std::find(used.begin(), used.end(), false) != used.end()) continue;
    Poly p = Poly::parse(src);
    if (p.nvars() == static_cast<std::size_t>(d)) return p;
  }
}

Check criterion5() {
  Check c;
  std::mt19937 g(501);
  const int N = 25;
  for (int i = 0; i < 15; ++i) {
    Poly p = random_poly(g);
    NewtonData nd = build_newton(p);
    std::size_t d = nd.dim();
    std::vector<std::map<std::int64_t, std::map<std::int64_t, BigInt>>> counts(nd.faces.size());
    bool partition_ok = true;
    for_each_positive(d, N, [&](const IVec& k) {
      std::int64_t best = dot(k, nd.support[0]);
      for (const auto& v : nd.support) best = std::min(best, dot(k, v));
      std::vector<std::size_t> pts;
      for (std::size_t j = 0; j < nd.support.size(); ++j)
        if (dot(k, nd.support[j]) == best) pts.push_back(j);
      int hits = 0, face = -1;
      for (std::size_t f = 0; f < nd.faces.size(); ++f)
        if (nd.faces[f].points == pts) ++hits, face = static_cast<int>(f);
      if (hits != 1 || &nd.trace(k) != &nd.faces[static_cast<std::size_t>(face)]) {
        partition_ok = false;
        return;
      }
      std::int64_t sum = 0;
      for (auto v : k) sum += v;
      if (best <= N) counts[static_cast<std::size_t>(face)][best][-sum] += 1;
    });
    c.expect(partition_ok, "partition " + p.str());
    if (!partition_ok) continue;
    for (std::size_t f = 0; f < nd.faces.size(); ++f) {
      ZetaSeries z = expand(cone_generating_function(nd, nd.faces[f]), N);
      for (int n = 1; n <= N; ++n) {
        std::map<std::int64_t, BigInt> got;
        if (!z[n].is_zero()) got = to_lseries(z[n].scalar_part().scalar(), N).terms;
        if (got != counts[f][n]) {
          c.expect(false, "cone series " + p.str() + " face " + std::to_string(f) + " T^" + std::to_string(n));
          break;
        }
      }
    }
  }
  for (int i = 0; i < 10; ++i) {
    BrieskornSpec s = mzt::random_spec(g, 1, 3, 2, 5);
    ZetaSeries nw = expand(guibert_zeta(Poly::from_brieskorn(s)), 40), cv = conv_route(s, 40);
    for (Functor f : {Functor::Fpos, Functor::Fplus, Functor::Fneg, Functor::Fminus, Functor::forget})
      c.expect(realize_series(nw, Invariant::chi_c, f) == realize_series(cv, Invariant::chi_c, f),
               "guibert vs convolution " + s.list_str() + " " + functor_name(f));
    try {
      c.expect(realize_series(nw, Invariant::beta, Functor::forget) ==
                   realize_series(cv, Invariant::beta, Functor::forget),
               "guibert vs convolution beta " + s.list_str());
    } catch (const UnknownClassValue&) {
    }
  }
  return c;
}

// ---- criterion 6 ----

Check criterion6() {
  Check c;
  std::mt19937 g(601);
  for (int i = 0; i < 20; ++i) {
    BrieskornSpec s = mzt::random_spec(g, 2, 2, 2, 6);
    Poly p = Poly::from_brieskorn(s);
    for (Region r : {Region::zero, Region::pos, Region::neg})
      c.expect(plane_curve_oracle(p, r) == chi_brieskorn_sets(s, r), "oracle " + s.list_str());
  }
  for (int i = 0; i < 200; ++i) {
    BrieskornSpec s = mzt::random_spec(g, 1, 4, 2, 7);
    long total = chi_brieskorn_sets(s, Region::pos) + chi_brieskorn_sets(s, Region::neg) +
                 chi_brieskorn_sets(s, Region::zero);
    long expect = 1;
    for (std::size_t j = 0; j < s.dim(); ++j) expect *= -2;
    c.expect(total == expect, "partition identity " + s.list_str());
  }
  return c;
}

// ---- criterion 7 ----

Check criterion7() {
  Check c;
  std::mt19937 g(701);
  for (int i = 0; i < 30; ++i) {
    BrieskornSpec s = mzt::random_spec(g, 1, 3, 2, 8);
    std::vector<std::int64_t> truth;
    for (const auto& t : s.terms()) truth.push_back(t.k);
    std::sort(truth.begin(), truth.end());
    BrieskornOracle o(s);
    try {
      RecoveryResult r = recover_exponents(o, s.dim());
      c.expect(r.exponents == truth, "recovery " + s.list_str());
    } catch (const Error& e) {
      c.expect(false, "recovery " + s.list_str() + ": " + e.code() + ": " + e.what());
    }
    int probes = 0;
    while (probes < 50) {
      BigInt n = mzt::uniform(g, 1, 500000);
      bool pure = true;
      BigInt sum = 0;
      for (const auto& t : s.terms()) {
        pure = pure && n % t.k != 0;
        sum += n / t.k;
      }
      if (!pure) continue;
      ++probes;
      c.expect(o.degF(n) == 1 - sum, "degF law " + s.list_str() + " n = " + n.get_str());
    }
  }
  return c;
}

// ---- criterion 8 ----

Check criterion8() {
  Check c;
  for (const auto& gc : golden::load_cases()) {
    int status = 0;
    std::string text = golden::render(gc, status);
    c.expect(status == gc.exit_status && text == golden::read(golden::path_of(gc)), "golden " + gc.name);
  }
  std::ifstream in(golden::data_dir() + "/corpus.txt");
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++n;
    c.expect(cli::parse_polynomial(line).poly.str() == line, "corpus " + line);
  }
  c.expect(n == 50, "corpus size " + std::to_string(n));
  std::string text = golden::read(kFixture);
  c.expect(serialize(parse_resolution(text)) == text, "resolution fixture round trip");
  return c;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Check()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "x^3 - y^3 golden suite across three routes", 3, criterion1},
      {2, "realized golden forms to order 30", 1, criterion2},
      {3, "algebraic property suites", 30, criterion3},
      {4, "Thom-Sebastiani", 60, criterion4},
      {5, "Newton engine oracles", 120, criterion5},
      {6, "chi_c oracle equivalence", 120, criterion6},
      {7, "Brieskorn recovery", 300, criterion7},
      {8, "CLI goldens and round trips", 10, criterion8},
  };
  int failed = 0;
  for (const auto& cr : all) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_seconds)
      c.failures.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(cr.limit_seconds) + " s");
    bool pass = c.failures.empty();
    failed += !pass;
    std::printf("criterion %d: %s  %s (%.2f s)\n", cr.id, pass ? "PASS" : "FAIL", cr.title, secs);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
