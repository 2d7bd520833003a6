#include "motivzeta/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "motivzeta/class_expr.hpp"
#include "motivzeta/errors.hpp"
#include "motivzeta/germ.hpp"
#include "motivzeta/newton.hpp"
#include "motivzeta/recovery.hpp"
#include "motivzeta/resolution.hpp"
#include "motivzeta/zeta.hpp"

namespace motivzeta::cli {

using ojson = nlohmann::ordered_json;

PolyExpr parse_polynomial(const std::string& src) {
  PolyExpr e{Poly::parse(src), std::nullopt};
  e.brieskorn = e.poly.brieskorn();
  return e;
}

int default_order() {
  if (const char* env = std::getenv("MOTIVZETA_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 100000) return static_cast<int>(v);
  }
  return kDefaultOrder;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- requests ----

struct ZetaRequest {
  std::string route;  // brieskorn, newton, resolution
  std::string arg;
  bool modified = false;
  bool assume_nondegenerate = false;
};

struct OutputOpts {
  bool rational = false;
  bool series = false;
  bool json = false;
  int order = 0;
};

// A computed zeta function: the rational form when one exists, and a series
// builder for any order.
struct ZetaValue {
  std::optional<RationalZeta> rational;
  std::function<ZetaSeries(int)> series;
};

BrieskornSpec require_brieskorn(const std::string& src) {
  PolyExpr e = parse_polynomial(src);
  if (!e.brieskorn) throw InvalidGerm("'" + src + "' is not a Brieskorn polynomial");
  return *e.brieskorn;
}

ZetaValue evaluate(const ZetaRequest& rq) {
  ZetaValue v;
  if (rq.route == "brieskorn") {
    BrieskornSpec spec = require_brieskorn(rq.arg);
    if (rq.modified) {
      v.rational = brieskorn_rational_form(spec);
      v.series = [spec](int n) { return brieskorn_modified_series(spec, n); };
    } else {
      v.rational = guibert_zeta(Poly::parse(rq.arg));
      v.series = [spec](int n) {
        return modified_transform(brieskorn_modified_series(spec, n), TransformDir::toPlain);
      };
    }
    return v;
  }
  RationalZeta plain;
  if (rq.route == "newton")
    plain = guibert_zeta(Poly::parse(rq.arg), rq.assume_nondegenerate);
  else
    plain = evaluate_rationality(load_resolution(rq.arg));
  if (rq.modified) {
    v.series = [plain](int n) { return modified_transform(expand(plain, n), TransformDir::toModified); };
  } else {
    v.rational = plain;
    v.series = [plain](int n) { return expand(plain, n); };
  }
  return v;
}

// ---- JSON helpers ----

ojson envelope(const std::string& command) {
  ojson o;
  o["schema"] = kSchemaVersion;
  o["command"] = command;
  return o;
}

ojson factors_json(const std::vector<SrFactor>& fs) {
  ojson a = ojson::array();
  for (const auto& f : fs) a.push_back({{"nu", f.nu}, {"N", f.N}, {"form", f.i_form ? "I" : "J"}});
  return a;
}

ojson rational_json(const RationalZeta& r) {
  ojson o;
  o["text"] = r.str();
  o["terms"] = ojson::array();
  for (const auto& t : r.terms())
    o["terms"].push_back(
        {{"coeff", to_string(t.coeff)}, {"tshift", t.tshift}, {"factors", factors_json(t.factors)}, {"pureL", t.pureL}});
  return o;
}

ojson series_json(const ZetaSeries& s) {
  ojson o;
  o["order"] = s.order();
  o["coefficients"] = ojson::array();
  for (int n = 1; n <= s.order(); ++n) o["coefficients"].push_back(to_string(s[n]));
  return o;
}

ojson realized_json(const RealizedRational& r) {
  ojson o;
  o["text"] = r.str();
  o["terms"] = ojson::array();
  for (const auto& t : r.terms)
    o["terms"].push_back(
        {{"coeff", realized_str(t.coeff, r.inv)}, {"tshift", t.tshift}, {"factors", factors_json(t.factors)}});
  return o;
}

std::string realized_series_str(const std::vector<Realized>& cs, Invariant inv) {
  std::string out;
  auto tp = [](std::size_t n) { return n == 1 ? std::string("T") : "T^" + std::to_string(n); };
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    Realized c = cs[i];
    bool neg = c.num().lead() < 0;
    if (neg) c = -c;
    std::string cstr;
    if (!c.is_one()) {
      cstr = realized_str(c, inv);
      if (c.num().terms().size() > 1 || !c.is_laurent()) cstr = "(" + cstr + ")";
      cstr += "*";
    }
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += cstr + tp(i + 1);
  }
  if (out.empty()) out = "0";
  return out + " + O(" + tp(cs.size() + 1) + ")";
}

void emit(std::ostream& out, const ojson& o) { out << o.dump(2) << "\n"; }

// ---- command builders ----

void add_order(CLI::App* sub, OutputOpts& opts) {
  sub->add_option("--order", opts.order, "series order (default 30 or $MOTIVZETA_ORDER)")->check(CLI::PositiveNumber);
}

// Registers brieskorn/newton/resolution/modified under `zeta`.
void add_zeta_routes(CLI::App* zeta, ZetaRequest& rq, OutputOpts& opts) {
  zeta->require_subcommand(1);
  auto route = [&](CLI::App* parent, const std::string& name, const std::string& what, bool modified) {
    CLI::App* s = parent->add_subcommand(name, what);
    s->fallthrough();
    s->add_option("arg", rq.arg, name == "resolution" ? "resolution JSON file" : "polynomial")->required();
    if (name == "newton") s->add_flag("--assume-nondegenerate", rq.assume_nondegenerate, "skip the non-degeneracy check");
    s->callback([&rq, name, modified] {
      rq.route = name;
      rq.modified = modified;
    });
    return s;
  };
  route(zeta, "brieskorn", "Brieskorn polynomial", false);
  route(zeta, "newton", "non-degenerate polynomial via its Newton polyhedron", false);
  route(zeta, "resolution", "resolution data file", false);
  CLI::App* mod = zeta->add_subcommand("modified", "modified zeta function");
  mod->require_subcommand(1);
  mod->fallthrough();
  route(mod, "brieskorn", "Brieskorn polynomial", true);
  route(mod, "newton", "non-degenerate polynomial", true);
  route(mod, "resolution", "resolution data file", true);
  zeta->add_flag("--rational", opts.rational, "print the rational form");
  zeta->add_flag("--series", opts.series, "print the series expansion");
  zeta->add_flag("--json", opts.json, "JSON output");
  add_order(zeta, opts);
}

std::vector<std::string> reversed(std::vector<std::string> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Parses a nested `zeta ...` command line, as used by `realize`.
ZetaRequest parse_nested_zeta(const std::vector<std::string>& args, OutputOpts& inner) {
  CLI::App app{"nested"};
  app.require_subcommand(1);
  ZetaRequest rq;
  add_zeta_routes(app.add_subcommand("zeta", "zeta function"), rq, inner);
  std::vector<std::string> rev = reversed(args);
  app.parse(rev);
  return rq;
}

void print_zeta(std::ostream& out, const ZetaRequest& rq, OutputOpts opts) {
  ZetaValue v = evaluate(rq);
  if (!opts.rational && !opts.series) {
    opts.rational = v.rational.has_value();
    opts.series = !opts.rational;
  }
  if (opts.rational && !v.rational)
    throw UnsupportedExpansion("no rational form is available for the modified zeta function of this route");
  ojson o = envelope("zeta");
  o["route"] = rq.route;
  o["modified"] = rq.modified;
  std::optional<ZetaSeries> s;
  if (opts.series) s = v.series(opts.order);
  if (opts.json) {
    if (opts.rational) o["rational"] = rational_json(*v.rational);
    if (s) o["series"] = series_json(*s);
    emit(out, o);
    return;
  }
  if (opts.rational) out << "rational: " << v.rational->str() << "\n";
  if (s) out << "series: " << s->str() << "\n";
}

void print_realized(std::ostream& out, const ZetaRequest& rq, Invariant inv, Functor f, OutputOpts opts) {
  ZetaValue v = evaluate(rq);
  if (!opts.rational && !opts.series) {
    opts.rational = v.rational.has_value();
    opts.series = !opts.rational;
  }
  if (opts.rational && !v.rational)
    throw UnsupportedExpansion("no rational form is available for the modified zeta function of this route");
  std::optional<RealizedRational> rr;
  if (opts.rational) rr = realize_rational(*v.rational, inv, f);
  std::vector<Realized> cs;
  if (opts.series) cs = realize_series(v.series(opts.order), inv, f);
  if (opts.json) {
    ojson o = envelope("realize");
    o["invariant"] = invariant_name(inv);
    o["functor"] = functor_name(f);
    o["route"] = rq.route;
    o["modified"] = rq.modified;
    if (rr) o["rational"] = realized_json(*rr);
    if (opts.series) {
      ojson a = ojson::array();
      for (const auto& c : cs) a.push_back(realized_str(c, inv));
      o["series"] = {{"order", opts.order}, {"coefficients", a}};
    }
    emit(out, o);
    return;
  }
  if (rr) out << "rational: " << rr->str() << "\n";
  if (opts.series) out << "series: " << realized_series_str(cs, inv) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Motivic zeta functions of real polynomial germs", "motivzeta"};
  app.require_subcommand(1);

  // zeta
  ZetaRequest zrq;
  OutputOpts zopt;
  CLI::App* zeta = app.add_subcommand("zeta", "zeta function of a germ");
  add_zeta_routes(zeta, zrq, zopt);

  // milnor
  std::string m_route, m_arg;
  bool m_json = false, m_assume = false;
  CLI::App* milnor = app.add_subcommand("milnor", "motivic Milnor fiber");
  milnor->add_option("route", m_route, "brieskorn, newton or resolution")
      ->required()
      ->check(CLI::IsMember({"brieskorn", "newton", "resolution"}));
  milnor->add_option("arg", m_arg, "polynomial or resolution file")->required();
  milnor->add_flag("--assume-nondegenerate", m_assume, "skip the non-degeneracy check (newton)");
  milnor->add_flag("--json", m_json, "JSON output");

  // realize
  bool r_chi = false, r_beta = false;
  bool r_plus = false, r_minus = false, r_pos = false, r_neg = false, r_forget = false;
  OutputOpts ropt;
  CLI::App* realize = app.add_subcommand("realize", "realized zeta function: realize <flags> zeta ...");
  realize->prefix_command();
  realize->add_flag("--chi", r_chi, "Euler characteristic with compact support");
  realize->add_flag("--beta", r_beta, "virtual Poincare polynomial");
  realize->add_flag("--plus", r_plus, "fiber over +1");
  realize->add_flag("--minus", r_minus, "fiber over -1");
  realize->add_flag("--pos", r_pos, "positive locus");
  realize->add_flag("--neg", r_neg, "negative locus");
  realize->add_flag("--forget", r_forget, "forgetful morphism");
  realize->add_flag("--rational", ropt.rational, "print the realized rational form");
  realize->add_flag("--series", ropt.series, "print the realized series");
  realize->add_flag("--json", ropt.json, "JSON output");
  add_order(realize, ropt);

  // recover
  std::size_t c_dim = 0;
  std::string c_self, c_oracle, c_dump;
  bool c_json = false;
  CLI::App* recover = app.add_subcommand("recover", "recover Brieskorn exponents from zeta coefficients");
  recover->add_option("--dim", c_dim, "number of variables")->required()->check(CLI::PositiveNumber);
  auto* self_opt = recover->add_option("--self-test", c_self, "Brieskorn polynomial used as hidden oracle");
  auto* oracle_opt = recover->add_option("--oracle", c_oracle, "coefficient dump file");
  self_opt->excludes(oracle_opt);
  recover->add_option("--dump", c_dump, "write the queried coefficients to this file");
  recover->add_flag("--json", c_json, "JSON output");

  // verify
  std::string v_p1, v_p2;
  OutputOpts vopt;
  CLI::App* verify = app.add_subcommand("verify", "identity checks");
  verify->require_subcommand(1);
  CLI::App* ts = verify->add_subcommand("ts", "Thom-Sebastiani for two Brieskorn polynomials");
  ts->add_option("p1", v_p1, "first polynomial")->required();
  ts->add_option("p2", v_p2, "second polynomial")->required();
  ts->add_flag("--json", vopt.json, "JSON output");
  add_order(ts, vopt);

  // parse / class
  std::string p_src;
  bool p_json = false;
  CLI::App* parse = app.add_subcommand("parse", "parse and normalize a polynomial");
  parse->add_option("poly", p_src, "polynomial")->required();
  parse->add_flag("--json", p_json, "JSON output");
  std::string k_src;
  CLI::App* cls = app.add_subcommand("class", "parse and normalize a class expression");
  cls->add_option("expr", k_src, "class expression")->required();

  std::vector<std::string> rev = reversed(args);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  auto fix_order = [](OutputOpts& o) {
    if (o.order == 0) o.order = default_order();
  };

  if (*zeta) {
    fix_order(zopt);
    print_zeta(out, zrq, zopt);
  } else if (*milnor) {
    MilnorFiber m;
    if (m_route == "brieskorn")
      m = milnor_fiber_brieskorn(require_brieskorn(m_arg));
    else if (m_route == "newton")
      m = milnor_fiber_newton(Poly::parse(m_arg), m_assume);
    else
      m = milnor_fiber_resolution(load_resolution(m_arg));
    if (m_json) {
      ojson o = envelope("milnor");
      o["route"] = m_route;
      o["milnor_fiber"] = to_string(m.value);
      emit(out, o);
    } else {
      out << "milnor fiber: " << to_string(m.value) << "\n";
    }
  } else if (*realize) {
    if (r_chi == r_beta) throw UsageError("realize needs exactly one of --chi, --beta");
    int nf = r_plus + r_minus + r_pos + r_neg + r_forget;
    if (nf != 1) throw UsageError("realize needs exactly one of --plus, --minus, --pos, --neg, --forget");
    Functor f = r_plus ? Functor::Fplus
                : r_minus ? Functor::Fminus
                : r_pos ? Functor::Fpos
                : r_neg ? Functor::Fneg
                        : Functor::forget;
    std::vector<std::string> rest = realize->remaining();
    if (rest.empty()) throw UsageError("realize needs a zeta command, e.g. realize --chi --pos zeta brieskorn \"x^3 - y^3\"");
    OutputOpts inner;
    ZetaRequest rq;
    try {
      rq = parse_nested_zeta(rest, inner);
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }
    // Output flags may sit on either side of the nested command.
    ropt.rational |= inner.rational;
    ropt.series |= inner.series;
    ropt.json |= inner.json;
    if (ropt.order == 0) ropt.order = inner.order;
    fix_order(ropt);
    print_realized(out, rq, r_chi ? Invariant::chi_c : Invariant::beta, f, ropt);
  } else if (*recover) {
    if (c_self.empty() == c_oracle.empty()) throw UsageError("recover needs exactly one of --self-test, --oracle");
    RecoveryResult res;
    std::vector<CoefficientRecord> records;
    if (!c_self.empty()) {
      BrieskornOracle oracle(require_brieskorn(c_self));
      res = recover_exponents(oracle, c_dim);
      records = oracle.records();
    } else {
      DumpOracle oracle(parse_records(read_file(c_oracle)));
      res = recover_exponents(oracle, c_dim);
    }
    if (!c_dump.empty()) {
      if (records.empty()) throw UsageError("--dump needs --self-test");
      std::ofstream f(c_dump);
      if (!f) throw SchemaError("cannot write " + c_dump);
      f << dump_records(records);
    }
    if (c_json) {
      ojson o = envelope("recover");
      o["dim"] = c_dim;
      o["exponents"] = res.exponents;
      o["bound"] = res.state.K;
      o["equations"] = res.equations;
      o["queries"] = res.queries;
      emit(out, o);
    } else {
      out << "exponents: " << join(res.exponents) << "\n";
      out << "bound: " << res.state.K << "\n";
      out << "equations: " << res.equations << "\n";
      out << "queries: " << res.queries << "\n";
    }
  } else if (*verify) {
    fix_order(vopt);
    ThomSebastianiReport rep = verify_thom_sebastiani(require_brieskorn(v_p1), require_brieskorn(v_p2), vopt.order);
    if (vopt.json) {
      ojson o = envelope("verify");
      o["check"] = "thom-sebastiani";
      o["order"] = vopt.order;
      o["pass"] = rep.pass;
      o["first_divergent"] = rep.first_divergent;
      o["milnor_identity"] = rep.milnor_ok;
      emit(out, o);
    } else {
      out << "thom-sebastiani: " << (rep.pass ? "pass" : "fail") << " (order " << vopt.order << ")\n";
      if (rep.first_divergent) out << "first divergent coefficient: " << rep.first_divergent << "\n";
      out << "milnor identity: " << (rep.milnor_ok ? "ok" : "fail") << "\n";
    }
    return rep.pass ? 0 : 1;
  } else if (*parse) {
    PolyExpr e = parse_polynomial(p_src);
    if (p_json) {
      ojson o = envelope("parse");
      o["polynomial"] = e.poly.str();
      o["variables"] = e.poly.vars();
      o["brieskorn"] = e.brieskorn ? ojson(e.brieskorn->list_str()) : ojson(nullptr);
      emit(out, o);
    } else {
      out << "polynomial: " << e.poly.str() << "\n";
      out << "brieskorn: " << (e.brieskorn ? e.brieskorn->list_str() : "no") << "\n";
    }
  } else if (*cls) {
    out << to_string(parse_class(k_src)) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace motivzeta::cli
