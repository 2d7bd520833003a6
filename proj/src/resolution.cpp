#include "motivzeta/resolution.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "motivzeta/class_expr.hpp"
#include "motivzeta/errors.hpp"

namespace motivzeta {

using ojson = nlohmann::ordered_json;

const Divisor& ResolutionData::divisor(const std::string& id) const {
  for (const auto& d : divisors)
    if (d.id == id) return d;
  throw SchemaError("unknown divisor id '" + id + "'");
}

namespace {

const ojson& field(const ojson& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw SchemaError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::int64_t positive_int(const ojson& obj, const char* key, const std::string& where) {
  const ojson& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    throw SchemaError(where + ": '" + key + "' must be a positive integer");
  return v.get<std::int64_t>();
}

std::string string_field(const ojson& obj, const char* key, const std::string& where) {
  const ojson& v = field(obj, key, where);
  if (!v.is_string()) throw SchemaError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

ResolutionData parse_resolution(const std::string& json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("resolution data must be a JSON object");
  for (const auto& [k, v] : doc.items())
    if (k != "divisors" && k != "strata") throw SchemaError("unexpected top-level field '" + k + "'");
  const ojson& divs = field(doc, "divisors", "resolution");
  const ojson& strata = field(doc, "strata", "resolution");
  if (!divs.is_array() || !strata.is_array()) throw SchemaError("'divisors' and 'strata' must be arrays");

  ResolutionData data;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    std::string where = "divisors[" + std::to_string(i) + "]";
    Divisor d{string_field(divs[i], "id", where), positive_int(divs[i], "N", where),
              positive_int(divs[i], "nu", where)};
    if (!ids.insert(d.id).second) throw SchemaError(where + ": duplicate id '" + d.id + "'");
    for (const auto& [k, v] : divs[i].items())
      if (k != "id" && k != "N" && k != "nu") throw SchemaError(where + ": unexpected field '" + k + "'");
    data.divisors.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < strata.size(); ++i) {
    std::string where = "strata[" + std::to_string(i) + "]";
    Stratum s;
    const ojson& I = field(strata[i], "I", where);
    if (!I.is_array() || I.empty()) throw SchemaError(where + ": 'I' must be a nonempty array");
    std::set<std::string> seen;
    for (const auto& id : I) {
      if (!id.is_string()) throw SchemaError(where + ": ids in 'I' must be strings");
      std::string name = id.get<std::string>();
      if (!ids.count(name)) throw SchemaError(where + ": dangling divisor id '" + name + "'");
      if (!seen.insert(name).second) throw SchemaError(where + ": repeated id '" + name + "'");
      s.I.push_back(name);
    }
    s.class_text = string_field(strata[i], "class", where);
    try {
      s.cls = parse_class(s.class_text);
    } catch (const ParseError& e) {
      throw SchemaError(where + ": bad class expression: " + e.what());
    }
    if (strata[i].contains("E_circ")) {
      s.e_circ_text = string_field(strata[i], "E_circ", where);
      MotClass e;
      try {
        e = parse_class(*s.e_circ_text);
      } catch (const ParseError& err) {
        throw SchemaError(where + ": bad E_circ expression: " + err.what());
      }
      if (!e.is_scalar()) throw SchemaError(where + ": E_circ must be a class without morphism");
      s.e_circ = e.scalar_part();
      ASClass expect = *s.e_circ * ASClass::torus(static_cast<int>(s.I.size()));
      if (forget(s.cls) != expect)
        throw ValidationFailure(where + ": forget of the stratum class is not (L-1)^|I| [E_I°]");
    }
    for (const auto& [k, v] : strata[i].items())
      if (k != "I" && k != "class" && k != "E_circ") throw SchemaError(where + ": unexpected field '" + k + "'");
    data.strata.push_back(std::move(s));
  }
  return data;
}

ResolutionData load_resolution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open resolution file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_resolution(ss.str());
}

std::string serialize(const ResolutionData& data) {
  ojson doc;
  doc["divisors"] = ojson::array();
  for (const auto& d : data.divisors) doc["divisors"].push_back({{"id", d.id}, {"N", d.N}, {"nu", d.nu}});
  doc["strata"] = ojson::array();
  for (const auto& s : data.strata) {
    ojson o{{"I", s.I}, {"class", s.class_text}};
    if (s.e_circ_text) o["E_circ"] = *s.e_circ_text;
    doc["strata"].push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

RationalZeta evaluate_rationality(const ResolutionData& data) {
  RationalZeta z;
  for (const auto& s : data.strata) {
    SrTerm t;
    t.coeff = s.cls;
    for (const auto& id : s.I) {
      const Divisor& d = data.divisor(id);
      t.factors.push_back({d.nu, d.N, true});
    }
    z.add(std::move(t));
  }
  return z;
}

MilnorFiber milnor_fiber_resolution(const ResolutionData& data) {
  MotClass s;
  for (const auto& st : data.strata) {
    if (st.I.size() % 2)
      s += st.cls;
    else
      s -= st.cls;
  }
  return {s};
}

std::vector<RealizedEntry> realized_zetas(const RationalZeta& z) {
  const std::vector<RealizedEntry> plan = {
      {"beta", Invariant::beta, Functor::forget, {}, {}},
      {"beta,+", Invariant::beta, Functor::Fplus, {}, {}},
      {"beta,-", Invariant::beta, Functor::Fminus, {}, {}},
      {"chi_c", Invariant::chi_c, Functor::forget, {}, {}},
      {"chi_c,>", Invariant::chi_c, Functor::Fpos, {}, {}},
      {"chi_c,<", Invariant::chi_c, Functor::Fneg, {}, {}},
  };
  std::vector<RealizedEntry> out;
  for (auto e : plan) {
    try {
      e.value = realize_rational(z, e.inv, e.functor);
    } catch (const UnknownClassValue& err) {
      e.error = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RealizedEntry> realized_zetas(const ResolutionData& data) {
  return realized_zetas(evaluate_rationality(data));
}

}  // namespace motivzeta
